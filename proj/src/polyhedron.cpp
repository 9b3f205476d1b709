#include "ratpow/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace ratpow {

namespace {

/// Fixed-width bitset sized at runtime.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  Bits operator&(const Bits& o) const {
    Bits r(*this);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  friend auto operator<=>(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

__int128 dot128(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

IntVector make_primitive(std::vector<__int128> v) {
  __int128 g = 0;
  for (auto x : v) {
    __int128 a = x < 0 ? -x : x;
    while (a != 0) {
      __int128 t = g % a;
      g = a;
      a = t;
    }
  }
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    __int128 q = g > 1 ? v[i] / g : v[i];
    if (q > INT64_MAX || q < INT64_MIN) throw OverflowError("double description ray overflow");
    out[i] = static_cast<std::int64_t>(q);
  }
  return out;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(x);
  return r;
}

struct Ray {
  IntVector v;
  Bits tight;
};

}  // namespace

std::int64_t IntegralHalfspace::eval(const Exponent& alpha) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s = checked_add(s, checked_mul(normal[i], alpha[i]));
  return s;
}

Rational IntegralHalfspace::eval(const RationalVector& point) const {
  Rational s(0);
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * point[i];
  return s;
}

ReducedHalfspace reduce_halfspace(const HalfspaceQ& h) {
  if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& r) { return r.sign() == 0; })) {
    throw DomainError("halfspace normal is zero");
  }
  for (const auto& r : h.normal) {
    if (r.sign() < 0) throw DomainError("halfspace normal must be nonnegative");
  }
  if (h.threshold.sign() < 0) throw DomainError("halfspace threshold must be nonnegative");
  std::int64_t den = h.threshold.den();
  for (const auto& r : h.normal) den = lcm64(den, r.den());
  IntVector entries;
  for (const auto& r : h.normal) entries.push_back(checked_mul(r.num(), den / r.den()));
  std::int64_t thr = checked_mul(h.threshold.num(), den / h.threshold.den());
  entries.push_back(thr);
  std::int64_t g = gcd_of(entries);
  entries.pop_back();
  ReducedHalfspace out;
  for (auto& e : entries) e /= g;
  out.halfspace.normal = std::move(entries);
  out.halfspace.threshold = thr / g;
  out.factor = Rational(g, den);
  return out;
}

bool NewtonPolyhedron::contains(const RationalVector& point) const {
  for (const auto& x : point) {
    if (x.sign() < 0) return false;
  }
  return std::all_of(facets.begin(), facets.end(),
                     [&](const IntegralHalfspace& f) { return f.eval(point) >= Rational(f.threshold); });
}

bool NewtonPolyhedron::contains(const Exponent& alpha) const {
  return std::all_of(facets.begin(), facets.end(), [&](const IntegralHalfspace& f) { return f.contains(alpha); });
}

std::int64_t NewtonPolyhedron::vertex_denominator_lcm() const {
  std::int64_t g = 1;
  for (const auto& v : vertices) {
    for (const auto& x : v) g = lcm64(g, x.den());
  }
  return g;
}

std::vector<IntVector> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t dim) {
  const std::size_t m = rows.size();
  // Pick dim independent rows for the initial simplicial cone.
  std::vector<std::size_t> basis;
  std::vector<RationalVector> chosen;
  for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
    chosen.push_back(to_rational(rows[i]));
    if (rank(chosen) == static_cast<int>(chosen.size())) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() < dim) throw InternalError("cone is not pointed");

  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    RationalVector rhs(dim, Rational(0));
    rhs[k] = Rational(1);
    RationalVector x;
    if (!solve(chosen, rhs, x)) throw InternalError("singular initial basis");
    std::int64_t den = 1;
    for (const auto& r : x) den = lcm64(den, r.den());
    std::vector<__int128> v;
    for (const auto& r : x) v.push_back(static_cast<__int128>(r.num()) * (den / r.den()));
    Ray ray{make_primitive(std::move(v)), Bits(m)};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) ray.tight.set(basis[j]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (auto b : basis) in_basis[b] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (in_basis[i]) continue;
    std::vector<__int128> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot128(rows[i], rays[r].v);
      if (s[r] > 0) pos.push_back(r);
      if (s[r] < 0) neg.push_back(r);
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] == 0) rays[r].tight.set(i);
      if (s[r] >= 0) next.push_back(rays[r]);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<__int128> v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = s[p] * rays[q].v[k] - s[q] * rays[p].v[k];
        Ray ray{make_primitive(std::move(v)), common};
        ray.tight.set(i);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

/// Tight-generator rank test shared by both constructions: a halfspace is a
/// facet when the homogenized generators on its boundary have rank dim.
int tight_rank(const IntegralHalfspace& h, const std::vector<RationalVector>& vertices, std::size_t dim) {
  std::vector<RationalVector> rows;
  for (const auto& v : vertices) {
    if (h.eval(v) == Rational(h.threshold)) {
      RationalVector row{Rational(1)};
      row.insert(row.end(), v.begin(), v.end());
      rows.push_back(std::move(row));
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (h.normal[j] == 0) {
      RationalVector row(dim + 1, Rational(0));
      row[j + 1] = Rational(1);
      rows.push_back(std::move(row));
    }
  }
  return rank(rows);
}

IntegralHalfspace coordinate_halfspace(std::size_t dim, std::size_t j) {
  IntegralHalfspace h;
  h.normal.assign(dim, 0);
  h.normal[j] = 1;
  h.threshold = 0;
  return h;
}

void sort_polyhedron(NewtonPolyhedron& p) {
  std::sort(p.vertices.begin(), p.vertices.end());
  std::sort(p.facets.begin(), p.facets.end());
  std::sort(p.coordinate_facets.begin(), p.coordinate_facets.end());
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw DomainError("Newton polyhedron requires a proper nonzero ideal");
  const std::size_t d = ideal.dim();
  std::vector<IntVector> rows;
  for (const auto& g : ideal.gens()) {
    IntVector row{1};
    for (int x : g) row.push_back(x);
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < d; ++j) {
    IntVector row(d + 1, 0);
    row[j + 1] = 1;
    rows.push_back(std::move(row));
  }
  NewtonPolyhedron p;
  p.dim = d;
  std::vector<IntegralHalfspace> all;
  for (const auto& y : cone_extreme_rays(rows, d + 1)) {
    IntegralHalfspace h;
    h.normal.assign(y.begin() + 1, y.end());
    h.threshold = -y[0];
    if (std::all_of(h.normal.begin(), h.normal.end(), [](std::int64_t v) { return v == 0; })) continue;
    all.push_back(h);
    if (h.threshold == 0) {
      auto nz = std::count_if(h.normal.begin(), h.normal.end(), [](std::int64_t v) { return v != 0; });
      if (nz != 1) throw InternalError("threshold-zero facet is not a coordinate facet");
      p.coordinate_facets.push_back(static_cast<int>(
          std::find_if(h.normal.begin(), h.normal.end(), [](std::int64_t v) { return v != 0; }) -
          h.normal.begin()));
    } else {
      p.facets.push_back(h);
    }
  }
  for (const auto& g : ideal.gens()) {
    std::vector<RationalVector> normals;
    for (const auto& h : all) {
      if (h.eval(g) == h.threshold) normals.push_back(to_rational(h.normal));
    }
    if (rank(normals) == static_cast<int>(d)) {
      RationalVector v;
      for (int x : g) v.emplace_back(x);
      p.vertices.push_back(std::move(v));
    }
  }
  sort_polyhedron(p);
  return p;
}

NewtonPolyhedron polyhedron_from_halfspaces(std::size_t dim, std::span<const IntegralHalfspace> halfspaces) {
  std::vector<IntegralHalfspace> reduced;
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw DomainError("halfspace dimension mismatch");
    HalfspaceQ q;
    for (auto a : h.normal) q.normal.emplace_back(a);
    q.threshold = Rational(h.threshold);
    reduced.push_back(reduce_halfspace(q).halfspace);
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  std::vector<IntVector> rows;
  for (const auto& h : reduced) {
    IntVector row{-h.threshold};
    row.insert(row.end(), h.normal.begin(), h.normal.end());
    rows.push_back(std::move(row));
  }
  IntVector homog(dim + 1, 0);
  homog[0] = 1;
  rows.push_back(homog);
  for (std::size_t j = 0; j < dim; ++j) {
    IntVector row(dim + 1, 0);
    row[j + 1] = 1;
    rows.push_back(std::move(row));
  }
  NewtonPolyhedron p;
  p.dim = dim;
  for (const auto& y : cone_extreme_rays(rows, dim + 1)) {
    if (y[0] == 0) continue;  // recession ray
    RationalVector v;
    for (std::size_t j = 0; j < dim; ++j) v.emplace_back(y[j + 1], y[0]);
    p.vertices.push_back(std::move(v));
  }
  if (p.vertices.empty()) throw DomainError("halfspace region has no vertex");
  for (const auto& h : reduced) {
    if (h.threshold <= 0) continue;
    if (tight_rank(h, p.vertices, dim) == static_cast<int>(dim)) p.facets.push_back(h);
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (tight_rank(coordinate_halfspace(dim, j), p.vertices, dim) == static_cast<int>(dim)) {
      p.coordinate_facets.push_back(static_cast<int>(j));
    }
  }
  sort_polyhedron(p);
  return p;
}

std::vector<Exponent> minimal_points_above(std::span<const IntegralHalfspace> weights) {
  if (weights.empty()) throw DomainError("minimal_points_above needs at least one weight");
  const std::size_t d = weights.front().normal.size();
  for (const auto& w : weights) {
    if (w.normal.size() != d) throw DomainError("weight dimension mismatch");
    for (auto a : w.normal) {
      if (a < 0) throw DomainError("weights must be nonnegative");
    }
    bool zero = std::all_of(w.normal.begin(), w.normal.end(), [](std::int64_t a) { return a == 0; });
    if (zero && w.threshold > 0) throw UnboundedRegion("weight with zero normal can never reach its threshold");
  }
  // A minimal alpha with alpha_j > 0 drops below some threshold t_i when
  // alpha_j decreases, so a_ij (alpha_j - 1) <= t_i - 1.
  std::vector<std::int64_t> bound(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& w : weights) {
      if (w.normal[j] > 0 && w.threshold > 0) {
        bound[j] = std::max(bound[j], floor_div(w.threshold - 1, w.normal[j]) + 1);
      }
    }
  }
  std::vector<Exponent> out;
  Exponent alpha(d);
  const std::size_t last = d - 1;
  std::vector<std::int64_t> partial(weights.size(), 0);

  auto satisfied_without = [&](std::size_t j) {
    // does alpha - e_j still satisfy every weight?
    for (std::size_t i = 0; i < weights.size(); ++i) {
      std::int64_t v = weights[i].eval(alpha) - weights[i].normal[j];
      if (v < weights[i].threshold) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == last) {
      std::int64_t need = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        std::int64_t deficit = weights[i].threshold - partial[i];
        if (deficit <= 0) continue;
        std::int64_t a = weights[i].normal[last];
        if (a == 0) return;
        need = std::max(need, ceil_div(deficit, a));
      }
      if (need > bound[last]) return;
      alpha[last] = static_cast<int>(need);
      bool minimal = true;
      for (std::size_t j = 0; j < last && minimal; ++j) {
        if (alpha[j] > 0 && satisfied_without(j)) minimal = false;
      }
      if (minimal) out.push_back(alpha);
      alpha[last] = 0;
      return;
    }
    for (std::int64_t v = 0; v <= bound[k]; ++v) {
      alpha[k] = static_cast<int>(v);
      self(self, k + 1);
      for (std::size_t i = 0; i < weights.size(); ++i) partial[i] += weights[i].normal[k];
    }
    for (std::size_t i = 0; i < weights.size(); ++i) partial[i] -= weights[i].normal[k] * (bound[k] + 1);
    alpha[k] = 0;
  };
  rec(rec, 0);
  return minimal_generators(std::move(out));
}

std::vector<Exponent> minimal_points_above(std::span<const IntVector> weights, std::int64_t n) {
  std::vector<IntegralHalfspace> hs;
  for (const auto& w : weights) hs.push_back({w, n});
  return minimal_points_above(hs);
}

bool ScaledPolyhedron::contains(const Exponent& alpha, std::int64_t n) const {
  // a . alpha >= n * scale * f  <=>  a . alpha * den >= n * num * f
  for (const auto& f : base.facets) {
    __int128 lhs = static_cast<__int128>(f.eval(alpha)) * scale.den();
    __int128 rhs = static_cast<__int128>(n) * scale.num() * f.threshold;
    if (lhs < rhs) return false;
  }
  return true;
}

std::int64_t count_region(std::span<const ScaledPolyhedron> inside, std::span<const ScaledPolyhedron> outside,
                          std::int64_t n) {
  if (n < 1) throw DomainError("count_region needs n >= 1");
  if (inside.empty() && outside.empty()) throw UnboundedRegion("region is the whole orthant");
  const std::size_t d = inside.empty() ? outside.front().base.dim : inside.front().base.dim;
  // Past the largest vertex coordinate of every inside polyhedron, any region
  // point can be pushed back onto the box boundary, so a hit-free boundary
  // certifies the count.
  Rational reach(0);
  for (auto list : {inside, outside}) {
    for (const auto& p : list) {
      if (p.base.dim != d) throw DomainError("count_region dimension mismatch");
      for (const auto& v : p.base.vertices) {
        for (const auto& x : v) reach = std::max(reach, x * p.scale * Rational(n));
      }
    }
  }
  std::int64_t box = reach.ceil() + 1;
  constexpr double kMaxPoints = 4e8;
  while (true) {
    double volume = 1;
    for (std::size_t j = 0; j < d; ++j) volume *= static_cast<double>(box + 1);
    if (volume > kMaxPoints) throw UnboundedRegion("lattice region escapes every enumeration box");
    std::int64_t count = 0;
    bool boundary_hit = false;
    Exponent alpha(d);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == d) {
        for (const auto& p : inside) {
          if (!p.contains(alpha, n)) return;
        }
        for (const auto& p : outside) {
          if (p.contains(alpha, n)) return;
        }
        ++count;
        for (std::size_t j = 0; j < d; ++j) {
          if (alpha[j] == box) boundary_hit = true;
        }
        return;
      }
      for (std::int64_t v = 0; v <= box; ++v) {
        alpha[k] = static_cast<int>(v);
        self(self, k + 1);
      }
      alpha[k] = 0;
    };
    rec(rec, 0);
    if (!boundary_hit) return count;
    box *= 2;
  }
}

std::vector<Face> enumerate_faces(const NewtonPolyhedron& p) {
  const std::size_t d = p.dim;
  const std::size_t nv = p.vertices.size();
  // Generators: vertices, then the rays e_1..e_d.
  auto vertex_tight = [&](const IntegralHalfspace& h) {
    std::vector<bool> s(nv + d, false);
    for (std::size_t v = 0; v < nv; ++v) s[v] = h.eval(p.vertices[v]) == Rational(h.threshold);
    for (std::size_t j = 0; j < d; ++j) s[nv + j] = h.normal[j] == 0;
    return s;
  };
  std::vector<std::vector<bool>> facet_sets;
  for (const auto& f : p.facets) facet_sets.push_back(vertex_tight(f));
  for (int j : p.coordinate_facets) facet_sets.push_back(vertex_tight(coordinate_halfspace(d, j)));

  auto has_vertex = [&](const std::vector<bool>& s) {
    return std::any_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(nv), [](bool b) { return b; });
  };
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue;
  for (const auto& s : facet_sets) {
    if (has_vertex(s) && seen.insert(s).second) queue.push_back(s);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& s : facet_sets) {
      std::vector<bool> meet(nv + d);
      for (std::size_t k = 0; k < nv + d; ++k) meet[k] = queue[q][k] && s[k];
      if (has_vertex(meet) && seen.insert(meet).second) queue.push_back(meet);
    }
  }
  std::vector<Face> faces;
  for (const auto& s : seen) {
    Face f;
    std::vector<RationalVector> rows;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!s[v]) continue;
      f.vertex_set.push_back(static_cast<int>(v));
      RationalVector row{Rational(1)};
      row.insert(row.end(), p.vertices[v].begin(), p.vertices[v].end());
      rows.push_back(std::move(row));
    }
    bool has_ray = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (!s[nv + j]) continue;
      has_ray = true;
      RationalVector row(d + 1, Rational(0));
      row[j + 1] = Rational(1);
      rows.push_back(std::move(row));
    }
    f.dim = rank(rows) - 1;
    f.compact = !has_ray;
    for (std::size_t k = 0; k < p.facets.size(); ++k) {
      if (std::equal(s.begin(), s.end(), facet_sets[k].begin(),
                     [](bool face, bool facet) { return !face || facet; })) {
        f.tight_facets.push_back(static_cast<int>(k));
      }
    }
    for (std::size_t k = 0; k < p.coordinate_facets.size(); ++k) {
      const auto& cs = facet_sets[p.facets.size() + k];
      if (std::equal(s.begin(), s.end(), cs.begin(), [](bool face, bool facet) { return !face || facet; })) {
        f.tight_coordinates.push_back(p.coordinate_facets[k]);
      }
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_set < b.vertex_set;
  });
  return faces;
}

int analytic_spread(const NewtonPolyhedron& p) {
  int best = 0;
  for (const auto& f : enumerate_faces(p)) {
    if (f.compact) best = std::max(best, f.dim);
  }
  return best + 1;
}

int analytic_spread(const MonomialIdeal& ideal) { return analytic_spread(newton_polyhedron(ideal)); }

std::string to_json(const NewtonPolyhedron& p) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : p.vertices) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : v) row.push_back(x.str());
    doc["vertices"].push_back(std::move(row));
  }
  doc["facets"] = nlohmann::ordered_json::array();
  for (const auto& f : p.facets) {
    nlohmann::ordered_json h;
    h["normal"] = f.normal;
    h["threshold"] = f.threshold;
    doc["facets"].push_back(std::move(h));
  }
  return doc.dump();
}

}  // namespace ratpow
