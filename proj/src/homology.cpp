#include "ratpow/homology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ratpow/polyhedron.hpp"

namespace ratpow {

namespace {

constexpr std::size_t kMaxHomologyDim = 12;

void check_dim(std::size_t d) {
  if (d > kMaxHomologyDim) throw LimitExceeded("homology is limited to at most 12 variables");
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  int r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    // inverse by Fermat
    std::int64_t a = ((m[r][c] % p) + p) % p, inv = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * a % p;
      a = a * a % p;
      e >>= 1;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] % p == 0) continue;
      const std::int64_t f = (m[i][c] % p + p) % p * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

int matrix_rank(const std::vector<std::vector<std::int64_t>>& m, int prime) {
  if (m.empty() || m[0].empty()) return 0;
  if (prime != 0) return rank_mod_p(m, prime);
  std::vector<RationalVector> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    RationalVector row;
    row.reserve(r.size());
    for (auto v : r) row.emplace_back(v);
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::uint32_t ground) {
  SimplicialComplex k;
  k.ground_ = ground;
  return k;
}

SimplicialComplex SimplicialComplex::irrelevant(std::uint32_t ground) {
  SimplicialComplex k;
  k.ground_ = ground;
  k.faces_ = {0};
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::uint32_t ground, const std::vector<std::uint32_t>& facets) {
  std::vector<std::uint32_t> faces;
  for (auto f : facets) {
    if ((f & ~ground) != 0) throw DomainError("facet outside the ground set");
    // every submask of f
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      faces.push_back(s);
      if (s == 0) break;
    }
  }
  return from_faces(ground, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::uint32_t ground, std::vector<std::uint32_t> faces) {
  if (std::popcount(ground) > 16) throw LimitExceeded("simplicial complexes are limited to 16 vertices");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex k;
  k.ground_ = ground;
  k.faces_ = std::move(faces);
  return k;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

std::vector<std::uint32_t> SimplicialComplex::facets() const {
  std::vector<std::uint32_t> out;
  for (auto f : faces_) {
    bool maximal = true;
    for (auto g : faces_) {
      if (g != f && (g & f) == f) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  int best = -2;
  for (auto f : faces_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

std::vector<int> reduced_betti_numbers(const SimplicialComplex& k, int prime) {
  if (k.is_void()) return {};
  const int top = k.dimension();
  // by_size[s] lists faces with s vertices, i.e. of dimension s - 1
  std::vector<std::vector<std::uint32_t>> by_size(top + 2);
  for (auto f : k.faces()) by_size[std::popcount(f)].push_back(f);

  // ranks[s] = rank of the boundary from size-s chains to size-(s-1) chains
  std::vector<int> ranks(top + 3, 0);
  for (int s = 1; s <= top + 1; ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      int sign = 1;
      for (int v : bits_of(upper[c])) {
        const std::uint32_t face = upper[c] & ~(1u << v);
        const auto it = std::lower_bound(lower.begin(), lower.end(), face);
        m[it - lower.begin()][c] = sign;
        sign = -sign;
      }
    }
    ranks[s] = matrix_rank(m, prime);
  }
  std::vector<int> out(top + 2);
  for (int s = 0; s <= top + 1; ++s) {
    out[s] = static_cast<int>(by_size[s].size()) - ranks[s] - ranks[s + 1];
  }
  return out;
}

int reduced_homology(const SimplicialComplex& k, int i, int prime) {
  const auto betti = reduced_betti_numbers(k, prime);
  const int idx = i + 1;
  if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
  return betti[idx];
}

int reduced_euler_characteristic(const SimplicialComplex& k) {
  int chi = 0;
  for (auto f : k.faces()) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

namespace {

/// Ideals I_S (variables of S set to 1) for every S.
class ProjectionCache {
 public:
  explicit ProjectionCache(const MonomialIdeal& ideal) {
    check_dim(ideal.dim());
    const std::uint32_t n = 1u << ideal.dim();
    proj_.reserve(n);
    for (std::uint32_t s = 0; s < n; ++s) proj_.push_back(ideal.projected(s));
  }
  const MonomialIdeal& operator[](std::uint32_t s) const { return proj_[s]; }

 private:
  std::vector<MonomialIdeal> proj_;
};

SimplicialComplex degree_complex_cached(const ProjectionCache& proj, std::size_t d, const DegreeKey& key) {
  const std::uint32_t all = d == 32 ? ~0u : ((1u << d) - 1);
  const std::uint32_t free = all & ~key.G;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f = free;; f = (f - 1) & free) {
    if (!proj[f | key.G].contains(key.beta)) faces.push_back(f);
    if (f == 0) break;
  }
  return SimplicialComplex::from_faces(free, std::move(faces));
}

CohomologyTable scan(const MonomialIdeal& ideal, const ProjectionCache& proj, const Exponent& rho, int prime) {
  const std::size_t d = ideal.dim();
  CohomologyTable table;
  table.dim = d;
  for (std::uint32_t G = 0; G < (1u << d); ++G) {
    // beta ranges over prod_{j not in G} [0, rho_j), zero on G
    std::vector<int> hi(d, 1);
    bool empty = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (G & (1u << j)) continue;
      hi[j] = rho[j];
      if (hi[j] == 0) empty = true;
    }
    if (empty) continue;
    Exponent beta(d);
    const int shift = std::popcount(G) + 1;
    while (true) {
      DegreeKey key{G, beta};
      const SimplicialComplex k = degree_complex_cached(proj, d, key);
      const auto betti = reduced_betti_numbers(k, prime);
      for (std::size_t b = 0; b < betti.size(); ++b) {
        if (betti[b] == 0) continue;
        const int i = static_cast<int>(b) - 1 + shift;
        table.entries[{i, key}] = betti[b];
      }
      std::size_t j = 0;
      for (; j < d; ++j) {
        if (G & (1u << j)) continue;
        if (++beta[j] < hi[j]) break;
        beta[j] = 0;
      }
      if (j == d) break;
    }
  }
  return table;
}

}  // namespace

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const DegreeKey& key) {
  if (key.beta.size() != ideal.dim()) throw DomainError("degree key dimension mismatch");
  if ((key.beta.support() & key.G) != 0) throw DomainError("degree key beta must vanish on G");
  ProjectionCache proj(ideal);
  return degree_complex_cached(proj, ideal.dim(), key);
}

LocalCohomology local_cohomology_table(const MonomialIdeal& ideal, const LocalCohomologyOptions& options) {
  if (!ideal.is_proper_nonzero()) throw DomainError("local cohomology needs a proper nonzero ideal");
  const std::size_t d = ideal.dim();
  ProjectionCache proj(ideal);
  const Exponent rho = ideal.max_exponents();
  LocalCohomology out;
  out.table = scan(ideal, proj, rho, options.prime);
  if (options.stability_check) {
    if (!(scan(ideal, proj, rho.scaled(2), options.prime) == out.table)) {
      throw InternalError("local cohomology scan box is not stable under doubling");
    }
  }
  out.a_invariants.assign(d + 1, std::nullopt);
  for (const auto& [k, v] : out.table.entries) {
    const auto& [i, key] = k;
    if (i < 0 || i > static_cast<int>(d)) throw InternalError("local cohomology index outside [0, d]");
    const int deg = static_cast<int>(key.beta.degree()) - std::popcount(key.G);
    auto& a = out.a_invariants[i];
    a = a ? std::max(*a, deg) : deg;
  }
  out.depth = -1;
  bool have_reg = false;
  for (std::size_t i = 0; i <= d; ++i) {
    if (!out.a_invariants[i]) continue;
    if (out.depth < 0) out.depth = static_cast<int>(i);
    const int r = *out.a_invariants[i] + static_cast<int>(i);
    out.regularity = have_reg ? std::max(out.regularity, r) : r;
    have_reg = true;
  }
  if (out.depth < 0) throw InternalError("local cohomology of a nonzero module vanished");
  return out;
}

std::string table_csv(const CohomologyTable& table) {
  std::ostringstream os;
  os << "i,G,beta,dim\n";
  for (const auto& [k, v] : table.entries) {
    const auto& [i, key] = k;
    os << i << ',';
    bool first = true;
    for (int j : bits_of(key.G)) {
      os << (first ? "" : ";") << j + 1;
      first = false;
    }
    os << ',';
    for (std::size_t j = 0; j < key.beta.size(); ++j) os << (j ? ";" : "") << key.beta[j];
    os << ',' << v << '\n';
  }
  return os.str();
}

LcLength lc_length(const LocalCohomology& lc, int i) {
  LcLength out;
  for (const auto& [k, v] : lc.table.entries) {
    if (k.first != i) continue;
    if (k.second.G != 0) {
      out.finite = false;
      out.length = 0;
      return out;
    }
    out.length += v;
  }
  return out;
}

LcLength lc_length(const MonomialIdeal& ideal, int i, const LocalCohomologyOptions& options) {
  return lc_length(local_cohomology_table(ideal, options), i);
}

std::int64_t colength_lattice(const RationalPowers& powers, std::int64_t n) {
  const MonomialIdeal& ideal = powers.ideal();
  for (std::size_t j = 0; j < ideal.dim(); ++j) {
    const bool pure = std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Exponent& g) {
      return g.support() == (1u << j);
    });
    if (!pure) throw DomainError("lattice colength needs an m-primary ideal");
  }
  if (n <= 0) return 0;
  ScaledPolyhedron p{newton_polyhedron(ideal), Rational(1, powers.e())};
  std::vector<ScaledPolyhedron> outside{p};
  return count_region({}, outside, n);
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [k, v] : entries) {
    if (k.first == i) s += v;
  }
  return s;
}

BettiTable betti_table(const MonomialIdeal& ideal, int prime) {
  if (!ideal.is_proper_nonzero()) throw DomainError("Betti numbers need a proper nonzero ideal");
  const std::size_t d = ideal.dim();
  check_dim(d);
  const Exponent top = ideal.lcm();
  BettiTable out;
  out.dim = d;
  bool any = false;
  int reg_ideal = 0;
  Exponent alpha(d);
  while (true) {
    // only lcms of generator subsets can carry Betti numbers
    Exponent l(d);
    bool has = false;
    for (const auto& g : ideal.gens()) {
      if (g.divides(alpha)) {
        l = has ? componentwise_max(l, g) : g;
        has = true;
      }
    }
    if (has && l == alpha) {
      const std::uint32_t supp = alpha.support();
      std::vector<std::uint32_t> faces;
      for (std::uint32_t f = supp;; f = (f - 1) & supp) {
        Exponent m = alpha;
        for (std::size_t j = 0; j < d; ++j) {
          if (f & (1u << j)) --m[j];
        }
        if (ideal.contains(m)) faces.push_back(f);
        if (f == 0) break;
      }
      const auto k = SimplicialComplex::from_faces(supp, std::move(faces));
      const auto betti = reduced_betti_numbers(k, prime);
      for (std::size_t b = 0; b < betti.size(); ++b) {
        if (betti[b] == 0) continue;
        const int i = static_cast<int>(b);  // H~_{i-1}
        out.entries[{i, alpha}] = betti[b];
        out.projective_dimension = std::max(out.projective_dimension, i);
        const int r = static_cast<int>(alpha.degree()) - i;
        reg_ideal = any ? std::max(reg_ideal, r) : r;
        any = true;
      }
    }
    std::size_t j = 0;
    for (; j < d; ++j) {
      if (++alpha[j] <= top[j]) break;
      alpha[j] = 0;
    }
    if (j == d) break;
  }
  if (!any) throw InternalError("Betti table of a nonzero ideal is empty");
  out.depth = static_cast<int>(d) - (out.projective_dimension + 1);
  out.regularity = reg_ideal - 1;
  return out;
}

}  // namespace ratpow
