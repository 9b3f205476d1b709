#pragma once
// Brute-force oracles. None of these touch the double-description code or the
// pruned searches of the library; they only share the basic ideal type.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/rational.hpp"

namespace oracle {

using ratpow::Exponent;
using ratpow::MonomialIdeal;
using ratpow::MonomialPrime;
using ratpow::Rational;
using ratpow::RationalVector;

inline void for_box(const std::vector<int>& hi, const std::function<void(const Exponent&)>& fn) {
  const std::size_t d = hi.size();
  Exponent a(d);
  while (true) {
    fn(a);
    std::size_t j = 0;
    for (; j < d; ++j) {
      if (++a[j] <= hi[j]) break;
      a[j] = 0;
    }
    if (j == d) return;
  }
}

inline void for_box(std::size_t d, int hi, const std::function<void(const Exponent&)>& fn) {
  for_box(std::vector<int>(d, hi), fn);
}

/// Feasibility of {x >= 0 : A x = b} with b >= 0 by a phase-one simplex over
/// the rationals, Bland's rule.
inline bool feasible(std::vector<RationalVector> A, RationalVector b) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  // tableau columns: n originals, m artificials, rhs
  std::vector<RationalVector> T(m, RationalVector(n + m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = Rational(1);
    T[i][n + m] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // reduced costs of minimizing the artificial sum
  auto cost = [&](std::size_t j) {
    Rational c = j >= n && j < n + m ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) c -= T[i][j];
    }
    return c;
  };
  while (true) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost(j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      const Rational ratio = T[i][n + m] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].sign() == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  Rational infeasibility(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += T[i][n + m];
  }
  return infeasibility.sign() == 0;
}

/// point in conv(gens) + orthant: some convex combination of generators lies
/// below the point.
inline bool in_newton_polyhedron(const MonomialIdeal& I, const RationalVector& point) {
  const std::size_t d = I.dim(), r = I.gens().size();
  // variables: lambda (r), slack (d). rows: coordinates, then sum lambda = 1
  std::vector<RationalVector> A(d + 1, RationalVector(r + d, Rational(0)));
  RationalVector b(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < r; ++i) A[j][i] = Rational(I.gens()[i][j]);
    A[j][r + j] = Rational(1);
    b[j] = point[j];
  }
  for (std::size_t i = 0; i < r; ++i) A[d][i] = Rational(1);
  b[d] = Rational(1);
  return feasible(std::move(A), std::move(b));
}

/// x^alpha in I^{a/b}: b alpha / a in NP(I).
inline bool in_rational_power(const MonomialIdeal& I, std::int64_t a, std::int64_t b, const Exponent& alpha) {
  if (a == 0) return true;
  RationalVector p;
  for (int v : alpha) p.push_back(Rational(b * v, a));
  return in_newton_polyhedron(I, p);
}

/// Minimal generators of I^{a/b} from the box [0, hi]^d.
inline MonomialIdeal rational_power_box(const MonomialIdeal& I, std::int64_t a, std::int64_t b, int hi) {
  std::vector<Exponent> pts;
  for_box(I.dim(), hi, [&](const Exponent& alpha) {
    if (in_rational_power(I, a, b, alpha)) pts.push_back(alpha);
  });
  return MonomialIdeal::from_generators(I.var_names(), std::move(pts));
}

/// Ass(R/I) from every divisor m of lcm(gens) with m not in I.
inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
  std::set<std::uint32_t> found;
  for_box(I.lcm().entries(), [&](const Exponent& m) {
    if (I.contains(m)) return;
    const MonomialIdeal q = ratpow::colon(I, m);
    std::uint32_t supp = 0;
    for (const auto& g : q.gens()) {
      if (g.degree() != 1) return;
      supp |= g.support();
    }
    found.insert(supp);
  });
  std::vector<MonomialPrime> out;
  for (auto s : found) out.push_back(MonomialPrime{s});
  std::sort(out.begin(), out.end());
  return out;
}

/// Lattice points alpha in [0, box]^d outside alpha / s of NP(I) where s = n scale.
inline std::int64_t count_outside(const MonomialIdeal& I, const Rational& scale, std::int64_t n, int box) {
  std::int64_t count = 0;
  const Rational s = scale * Rational(n);
  for_box(I.dim(), box, [&](const Exponent& alpha) {
    RationalVector p;
    for (int v : alpha) p.push_back(Rational(v) / s);
    if (!in_newton_polyhedron(I, p)) ++count;
  });
  return count;
}

/// Number of standard monomials of an m-primary ideal.
inline std::int64_t colength(const MonomialIdeal& I) {
  std::int64_t count = 0;
  for_box(I.lcm().entries(), [&](const Exponent& a) { count += !I.contains(a); });
  return count;
}

/// Stanley depth of J/I by unrestricted interval partitions of the truncated
/// poset at g. Exponential; only for boxes of a dozen points.
inline int sdepth_brute(const MonomialIdeal& upper, const MonomialIdeal& lower, const Exponent& g) {
  std::vector<Exponent> P;
  for_box(g.entries(), [&](const Exponent& a) {
    if (upper.contains(a) && !lower.contains(a)) P.push_back(a);
  });
  std::stable_sort(P.begin(), P.end(), [](const Exponent& a, const Exponent& b) { return a.degree() < b.degree(); });
  auto rho = [&](const Exponent& a) {
    int r = 0;
    for (std::size_t j = 0; j < g.size(); ++j) r += a[j] == g[j];
    return r;
  };
  std::vector<bool> covered(P.size(), false);
  int best = -1;
  std::function<void(int)> go = [&](int current) {
    if (current <= best) return;
    std::size_t i = 0;
    while (i < P.size() && covered[i]) ++i;
    if (i == P.size()) {
      best = current;
      return;
    }
    const Exponent& c = P[i];
    for (std::size_t t = 0; t < P.size(); ++t) {
      const Exponent& top = P[t];
      if (!c.divides(top)) continue;
      std::vector<std::size_t> cells;
      bool ok = true;
      for_box(g.entries(), [&](const Exponent& a) {
        if (!ok || !c.divides(a) || !a.divides(top)) return;
        const auto it = std::find(P.begin(), P.end(), a);
        const auto idx = static_cast<std::size_t>(it - P.begin());
        if (it == P.end() || covered[idx]) {
          ok = false;
          return;
        }
        cells.push_back(idx);
      });
      if (!ok) continue;
      for (auto k : cells) covered[k] = true;
      go(std::min(current, rho(top)));
      for (auto k : cells) covered[k] = false;
    }
  };
  go(static_cast<int>(g.size()));
  return best;
}

}  // namespace oracle
