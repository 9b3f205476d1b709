#include "ratpow/filtration.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace ratpow {

namespace {

IntegralHalfspace reduced(const IntegralHalfspace& h) {
  HalfspaceQ q;
  for (auto a : h.normal) q.normal.emplace_back(a);
  q.threshold = Rational(h.threshold);
  return reduce_halfspace(q).halfspace;
}

void validate(const HyperplaneFamily& family) {
  if (family.halfspaces.empty()) throw DomainError("hyperplane family is empty");
  for (const auto& h : family.halfspaces) {
    if (h.normal.size() != family.dim()) throw DomainError("halfspace dimension mismatch");
    if (h.threshold <= 0) throw DomainError("family thresholds must be positive");
    if (std::any_of(h.normal.begin(), h.normal.end(), [](std::int64_t a) { return a < 0; })) {
      throw DomainError("family normals must be nonnegative");
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](std::int64_t a) { return a == 0; })) {
      throw DomainError("family normal is zero");
    }
  }
}

}  // namespace

HyperplaneFamily parse_family_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("halfspaces")) {
    throw ParseError("family document needs \"vars\" and \"halfspaces\"");
  }
  HyperplaneFamily family;
  try {
    family.vars = doc["vars"].get<std::vector<std::string>>();
    for (const auto& h : doc["halfspaces"]) {
      IntegralHalfspace hs;
      hs.normal = h.at("normal").get<IntVector>();
      hs.threshold = h.at("threshold").get<std::int64_t>();
      if (hs.normal.size() != family.vars.size()) throw ParseError("halfspace normal length must equal variable count");
      family.halfspaces.push_back(std::move(hs));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed family document: ") + e.what());
  }
  try {
    validate(family);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return family;
}

std::string to_json(const HyperplaneFamily& family) {
  nlohmann::ordered_json doc;
  doc["vars"] = family.vars;
  doc["halfspaces"] = nlohmann::ordered_json::array();
  for (const auto& h : family.halfspaces) {
    nlohmann::ordered_json item;
    item["normal"] = h.normal;
    item["threshold"] = h.threshold;
    doc["halfspaces"].push_back(std::move(item));
  }
  return doc.dump();
}

MonomialIdeal family_index(const HyperplaneFamily& family, const Rational& sigma) {
  if (sigma.sign() <= 0) throw DomainError("family index sigma must be positive");
  validate(family);
  std::vector<IntegralHalfspace> weights;
  for (const auto& h : family.halfspaces) {
    IntegralHalfspace r = reduced(h);
    r.threshold = (sigma * Rational(r.threshold)).ceil();
    weights.push_back(std::move(r));
  }
  return MonomialIdeal::from_generators(family.vars, minimal_points_above(weights));
}

FamilyResult family_to_ideal(const HyperplaneFamily& family) {
  validate(family);
  FamilyResult out;
  out.region = polyhedron_from_halfspaces(family.dim(), family.halfspaces);
  out.halfspaces = out.region.facets;
  out.g = out.region.vertex_denominator_lcm();
  std::vector<Exponent> gens;
  for (const auto& v : out.region.vertices) {
    Exponent p(family.dim());
    for (std::size_t j = 0; j < v.size(); ++j) p[j] = static_cast<int>((v[j] * Rational(out.g)).num());
    gens.push_back(std::move(p));
  }
  out.ideal = MonomialIdeal::from_generators(family.vars, std::move(gens));
  if (out.ideal.gens().size() != out.region.vertices.size()) {
    throw InternalError("scaled vertices of the family region are not an antichain");
  }
  std::int64_t predicted_e = 1;
  for (const auto& h : out.halfspaces) {
    out.f = lcm64(out.f, h.threshold);
    IntVector entries = h.normal;
    entries.push_back(checked_mul(h.threshold, out.g));
    std::int64_t m = gcd_of(entries);
    if (out.g % m != 0) throw InternalError("reduction factor does not divide g");
    out.reduction_factors.push_back(m);
    predicted_e = lcm64(predicted_e, checked_mul(h.threshold, out.g) / m);
  }

  // NP(J) must be g * C_1 facet for facet.
  NewtonPolyhedron np = newton_polyhedron(out.ideal);
  std::vector<IntegralHalfspace> scaled;
  for (const auto& h : out.halfspaces) {
    IntegralHalfspace s = h;
    s.threshold = checked_mul(h.threshold, out.g);
    scaled.push_back(reduced(s));
  }
  std::sort(scaled.begin(), scaled.end());
  if (scaled != np.facets) throw InternalError("NP(J) differs from the scaled family region");

  out.e = rees_valuations(out.ideal).e;
  if (out.e != predicted_e) throw InternalError("canonical denominator of J disagrees with lcm(g f_i / m_i)");
  return out;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n) {
  if (!ideal.is_squarefree()) throw DomainError("symbolic powers are implemented for squarefree ideals");
  if (n < 0) throw DomainError("symbolic power exponent must be nonnegative");
  if (n == 0) return MonomialIdeal::unit(ideal.var_names());
  MonomialIdeal out = MonomialIdeal::unit(ideal.var_names());
  for (const auto& p : minimal_primes(ideal)) {
    MonomialIdeal pn = MonomialIdeal::from_generators(ideal.var_names(), prime_power(ideal.dim(), p, n).gens());
    out = intersect(out, pn);
  }
  return out;
}

SymbolicGenerator symbolic_generator_ideal(const MonomialIdeal& ideal, int certify_up_to) {
  if (!ideal.is_squarefree()) throw DomainError("symbolic_generator_ideal requires a squarefree ideal");
  HyperplaneFamily family;
  family.vars = ideal.var_names();
  for (const auto& p : minimal_primes(ideal)) {
    IntegralHalfspace h;
    h.normal.assign(ideal.dim(), 0);
    for (int i : p.variables()) h.normal[i] = 1;
    h.threshold = 1;
    family.halfspaces.push_back(std::move(h));
  }
  SymbolicGenerator out;
  out.family = family_to_ideal(family);
  out.g = out.family.g;
  out.ideal = out.family.ideal;
  if (!(out.ideal == symbolic_power(ideal, static_cast<int>(out.g)))) {
    throw InternalError("J differs from I^(g)");
  }
  if (certify_up_to > 0) {
    RationalPowers powers(out.ideal);
    for (int n = 1; n <= certify_up_to; ++n) {
      if (!(powers.power(RationalIndex(n, out.g)) == symbolic_power(ideal, n))) {
        throw InternalError("I^(n) differs from J^(n/g) at n = " + std::to_string(n));
      }
    }
  }
  return out;
}

namespace {

template <typename MinimalBetas, typename InTarget>
SplittingReport run_splitting(std::int64_t m, const SplittingOptions& options, MinimalBetas&& betas,
                              InTarget&& in_target) {
  if (m < 2) throw DomainError("splitting check needs m >= 2");
  const std::int64_t j_max = options.j_max == 0 ? m : options.j_max;
  if (options.j_min < 1 || j_max > m || options.j_min > j_max) throw DomainError("splitting j range outside [1, m]");
  SplittingReport report;
  for (std::int64_t n = options.n_min; n <= options.n_max; ++n) {
    for (std::int64_t j = options.j_min; j <= j_max; ++j) {
      for (const auto& beta : betas(n, j)) {
        ++report.checked;
        if (!in_target(n + 1, beta)) {
          report.passed = false;
          report.counterexample = SplittingCounterexample{n, j, beta};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

SplittingReport check_splitting(const FiltrationAccessor& filtration, std::int64_t m, const SplittingOptions& options) {
  std::int64_t cached_k = -1;
  MonomialIdeal cached;
  auto betas = [&](std::int64_t n, std::int64_t j) {
    MonomialIdeal source = filtration(n * m + j);
    std::vector<Exponent> out;
    for (const auto& g : source.gens()) {
      Exponent b(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) b[i] = static_cast<int>(ceil_div(g[i], m));
      out.push_back(std::move(b));
    }
    return minimal_generators(std::move(out));
  };
  auto in_target = [&](std::int64_t k, const Exponent& beta) {
    if (k != cached_k) {
      cached = filtration(k);
      cached_k = k;
    }
    return cached.contains(beta);
  };
  return run_splitting(m, options, betas, in_target);
}

SplittingReport check_splitting(const RationalPowers& powers, std::int64_t m, const SplittingOptions& options) {
  auto betas = [&](std::int64_t n, std::int64_t j) {
    return minimal_points_above(powers.rees().normalized_weights, ceil_div(n * m + j, m));
  };
  auto in_target = [&](std::int64_t k, const Exponent& beta) { return powers.member_step(k, beta); };
  return run_splitting(m, options, betas, in_target);
}

}  // namespace ratpow
