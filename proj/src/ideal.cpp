#include "ratpow/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace ratpow {

Exponent::Exponent(std::initializer_list<int> entries) : e_(entries) {
  for (int v : e_) {
    if (v < 0) throw DomainError("negative exponent");
  }
}

Exponent::Exponent(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_) {
    if (v < 0) throw DomainError("negative exponent");
  }
}

std::int64_t Exponent::degree() const {
  std::int64_t s = 0;
  for (int v : e_) s += v;
  return s;
}

bool Exponent::divides(const Exponent& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool Exponent::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 1; });
}

std::uint32_t Exponent::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) mask |= 1u << i;
  }
  return mask;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Exponent Exponent::scaled(int k) const {
  Exponent r(*this);
  for (int& v : r.e_) v *= k;
  return r;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // larger leading exponents first
  return b.e_ <=> a.e_;
}

Exponent componentwise_max(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::vector<Exponent> minimal_generators(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After the graded sort a divisor always precedes its multiples.
  std::vector<Exponent> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Exponent& k) { return k.divides(g); });
    if (!dominated) kept.push_back(std::move(g));
  }
  return kept;
}

std::vector<int> MonomialPrime::variables() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (support & (1u << i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> default_var_names(std::size_t dim) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) {
    out.push_back(dim <= 4 ? std::string(names[i]) : "x" + std::to_string(i + 1));
  }
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<std::string> vars, std::vector<Exponent> gens) {
  for (const auto& g : gens) {
    if (g.size() != vars.size()) throw DomainError("generator dimension does not match variable count");
  }
  if (vars.size() > 32) throw LimitExceeded("at most 32 variables are supported");
  MonomialIdeal out;
  out.vars_ = std::move(vars);
  out.gens_ = minimal_generators(std::move(gens));
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t dim, std::vector<Exponent> gens) {
  return from_generators(default_var_names(dim), std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> vars) {
  std::size_t d = vars.size();
  return from_generators(std::move(vars), {Exponent(d)});
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> vars) {
  return from_generators(std::move(vars), {});
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Exponent& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Exponent& m) const {
  if (m.size() != dim()) throw DomainError("dimension mismatch in membership test");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.divides(m); });
}

Exponent MonomialIdeal::lcm() const {
  Exponent r(dim());
  for (const auto& g : gens_) r = componentwise_max(r, g);
  return r;
}

MonomialIdeal MonomialIdeal::projected(std::uint32_t mask) const {
  std::vector<Exponent> gens;
  gens.reserve(gens_.size());
  for (Exponent g : gens_) {
    for (std::size_t i = 0; i < dim(); ++i) {
      if (mask & (1u << i)) g[i] = 0;
    }
    gens.push_back(std::move(g));
  }
  return from_generators(vars_, std::move(gens));
}

std::string MonomialIdeal::monomial_str(const Exponent& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += monomial_str(g);
  }
  return out;
}

namespace {

void check_dims(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DomainError("dimension mismatch between ideals");
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int parse_exponent(const std::string& text, const std::string& token) {
  if (text.empty()) throw ParseError("missing exponent in '" + token + "'");
  if (text[0] == '-') throw ParseError("negative exponent in '" + token + "'");
  long v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed exponent in '" + token + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw ParseError("exponent too large in '" + token + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::vector<std::string> vars) {
  const bool infer = vars.empty();
  struct Factor {
    std::string var;
    int exp;
  };
  std::vector<std::vector<Factor>> monomials;
  std::string body = trim(text);
  if (body.empty()) throw ParseError("empty generator list");
  for (const auto& token : split(body, ',')) {
    if (token.empty()) throw ParseError("empty generator in list");
    std::vector<Factor> factors;
    if (token == "1") {
      monomials.push_back(factors);
      continue;
    }
    for (const auto& factor : split(token, '*')) {
      auto caret = factor.find('^');
      std::string name = trim(factor.substr(0, caret));
      if (!is_identifier(name)) throw ParseError("malformed token '" + token + "'");
      int exp = caret == std::string::npos ? 1 : parse_exponent(trim(factor.substr(caret + 1)), token);
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
        if (!infer) throw ParseError("unknown variable '" + name + "'");
        vars.push_back(name);
      }
      factors.push_back({name, exp});
    }
    monomials.push_back(std::move(factors));
  }
  std::vector<Exponent> gens;
  for (const auto& factors : monomials) {
    Exponent e(vars.size());
    for (const auto& f : factors) {
      auto pos = std::find(vars.begin(), vars.end(), f.var) - vars.begin();
      e[pos] += f.exp;
    }
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_generators(std::move(vars), std::move(gens));
}

MonomialIdeal parse_ideal_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("gens")) {
    throw ParseError("ideal document needs \"vars\" and \"gens\"");
  }
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string() || !is_identifier(v.get<std::string>())) throw ParseError("bad variable name");
    vars.push_back(v.get<std::string>());
  }
  std::vector<Exponent> gens;
  for (const auto& g : doc["gens"]) {
    if (!g.is_array() || g.size() != vars.size()) throw ParseError("generator length must equal variable count");
    std::vector<int> entries;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw ParseError("generator entries must be integers");
      if (x.get<long>() < 0) throw ParseError("negative exponent in generator");
      entries.push_back(x.get<int>());
    }
    gens.emplace_back(std::move(entries));
  }
  return MonomialIdeal::from_generators(std::move(vars), std::move(gens));
}

MonomialIdeal parse_ideal_document(std::string_view text) {
  std::string body = trim(text);
  if (!body.empty() && body[0] == '{') return parse_ideal_json(body);
  std::vector<std::string> vars;
  if (body.rfind("vars:", 0) == 0) {
    auto nl = body.find('\n');
    std::string header = body.substr(5, nl == std::string::npos ? std::string::npos : nl - 5);
    for (auto& v : split(header, ',')) {
      if (!is_identifier(v)) throw ParseError("bad variable name '" + v + "'");
      vars.push_back(v);
    }
    body = nl == std::string::npos ? std::string() : body.substr(nl + 1);
  }
  std::replace(body.begin(), body.end(), '\n', ' ');
  return parse_ideal(body, std::move(vars));
}

std::string to_json(const MonomialIdeal& ideal) {
  nlohmann::json doc;
  doc["vars"] = ideal.var_names();
  doc["gens"] = nlohmann::json::array();
  for (const auto& g : ideal.gens()) doc["gens"].push_back(g.entries());
  return doc.dump();
}

bool contains(const MonomialIdeal& ideal, const Exponent& m) { return ideal.contains(m); }

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_dims(a, b);
  std::vector<Exponent> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(g + h);
  }
  return MonomialIdeal::from_generators(a.var_names(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int n) {
  if (n < 0) throw DomainError("negative ideal power");
  MonomialIdeal out = MonomialIdeal::unit(ideal.var_names());
  for (int i = 0; i < n; ++i) out = product(out, ideal);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_dims(a, b);
  std::vector<Exponent> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(componentwise_max(g, h));
  }
  return MonomialIdeal::from_generators(a.var_names(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_dims(a, b);
  std::vector<Exponent> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::from_generators(a.var_names(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Exponent& m) {
  if (m.size() != ideal.dim()) throw DomainError("dimension mismatch in colon");
  std::vector<Exponent> gens;
  for (const auto& g : ideal.gens()) {
    Exponent q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
    gens.push_back(std::move(q));
  }
  return MonomialIdeal::from_generators(ideal.var_names(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_dims(a, b);
  return std::all_of(a.gens().begin(), a.gens().end(), [&](const Exponent& g) { return b.contains(g); });
}

MonomialIdeal prime_power(std::size_t dim, const MonomialPrime& prime, int n) {
  std::vector<int> vars = prime.variables();
  std::vector<Exponent> gens;
  // all compositions of n over the prime's variables
  Exponent cur(dim);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k + 1 == vars.size()) {
      cur[vars[k]] = left;
      gens.push_back(cur);
      cur[vars[k]] = 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[vars[k]] = v;
      self(self, k + 1, left - v);
    }
    cur[vars[k]] = 0;
  };
  if (vars.empty()) throw DomainError("empty monomial prime");
  rec(rec, 0, n);
  return MonomialIdeal::from_generators(dim, std::move(gens));
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw DomainError("minimal_primes requires a squarefree ideal");
  if (!ideal.is_proper_nonzero()) throw DomainError("minimal_primes requires a proper nonzero ideal");
  const std::size_t d = ideal.dim();
  if (d > 20) throw LimitExceeded("minimal_primes supports at most 20 variables");
  std::vector<std::uint32_t> edges;
  for (const auto& g : ideal.gens()) edges.push_back(g.support());
  std::vector<std::uint32_t> subsets(1u << d);
  for (std::uint32_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<MonomialPrime> covers;
  for (std::uint32_t s : subsets) {
    bool covers_all = std::all_of(edges.begin(), edges.end(), [&](std::uint32_t e) { return (e & s) != 0; });
    if (!covers_all) continue;
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [&](const MonomialPrime& p) { return (p.support & s) == p.support; });
    if (minimal) covers.push_back({s});
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<AssociatedPrimeWitness> associated_primes_with_witnesses(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw DomainError("associated_primes requires a proper nonzero ideal");
  const std::size_t d = ideal.dim();
  const Exponent top = ideal.lcm();
  std::vector<AssociatedPrimeWitness> out;
  for (std::uint32_t s = 1; s < (1u << d); ++s) {
    // Localize at P_s: variables outside s become units.
    MonomialIdeal local = ideal.projected(~s & ((1u << d) - 1));
    if (local.is_unit()) continue;
    std::vector<int> vars = MonomialPrime{s}.variables();
    // A socle witness u has u_i = g_i - 1 for some generator g, for every i in s.
    std::vector<std::vector<int>> candidates(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) {
      for (const auto& g : local.gens()) {
        if (g[vars[k]] >= 1) candidates[k].push_back(g[vars[k]] - 1);
      }
      std::sort(candidates[k].begin(), candidates[k].end());
      candidates[k].erase(std::unique(candidates[k].begin(), candidates[k].end()), candidates[k].end());
    }
    bool found = false;
    Exponent u(d);
    const std::size_t last = vars.size() - 1;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (found) return;
      if (k == last) {
        // The last coordinate is forced: the largest value keeping u outside.
        const int j = vars[last];
        int bound = -1;
        for (const auto& g : local.gens()) {
          bool below = true;
          for (std::size_t t = 0; t < last; ++t) {
            if (g[vars[t]] > u[vars[t]]) {
              below = false;
              break;
            }
          }
          if (below && (bound < 0 || g[j] < bound)) bound = g[j];
        }
        if (bound <= 0) return;
        u[j] = bound - 1;
        bool socle = true;
        for (int i : vars) {
          u[i] += 1;
          bool in = local.contains(u);
          u[i] -= 1;
          if (!in) {
            socle = false;
            break;
          }
        }
        if (socle) {
          Exponent witness = u;
          for (std::size_t i = 0; i < d; ++i) {
            if (!(s & (1u << i))) witness[i] = top[i];
          }
          out.push_back({MonomialPrime{s}, witness});
          found = true;
        }
        u[j] = 0;
        return;
      }
      for (int v : candidates[k]) {
        u[vars[k]] = v;
        self(self, k + 1);
        if (found) break;
      }
      u[vars[k]] = 0;
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const AssociatedPrimeWitness& a, const AssociatedPrimeWitness& b) { return a.prime < b.prime; });
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> out;
  for (const auto& w : associated_primes_with_witnesses(ideal)) out.push_back(w.prime);
  return out;
}

std::string prime_str(const MonomialPrime& p, const std::vector<std::string>& vars) {
  std::string out = "(";
  bool first = true;
  for (int i : p.variables()) {
    if (!first) out += " ";
    out += vars.at(i);
    first = false;
  }
  return out + ")";
}

}  // namespace ratpow
