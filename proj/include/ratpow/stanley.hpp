#pragma once

#include <cstdint>
#include <optional>

#include "ratpow/ideal.hpp"
#include "ratpow/rational_power.hpp"

namespace ratpow {

/// Monomial module J/I with I inside J. kind = Quotient means J = R, kind =
/// Ideal means I = 0.
struct StanleyInstance {
  enum class Kind { Quotient, Ideal, Relative };
  Kind kind = Kind::Quotient;
  MonomialIdeal upper;  // J
  MonomialIdeal lower;  // I
  /// Truncation multidegree g; filled from the generators when empty.
  Exponent bound;

  static StanleyInstance quotient(const MonomialIdeal& ideal);
  static StanleyInstance ideal(const MonomialIdeal& ideal);
  static StanleyInstance relative(const MonomialIdeal& upper, const MonomialIdeal& lower);
};

struct StanleyLimits {
  std::size_t max_dim = 4;
  /// Cap on the number of box points searched, recheck box included.
  std::int64_t max_box = 10000;
  std::int64_t max_nodes = 5'000'000;
  /// Recompute at g + 1 and require the same answer.
  bool recheck = true;
};

/// Exact Stanley depth by interval partitions of the truncated poset.
/// Throws LimitExceeded outside the limits.
int sdepth_exact(const StanleyInstance& inst, const StanleyLimits& limits = {});

struct PowerEquivalenceReport {
  bool a_lhs = false, a_rhs = false;
  /// f in I^{s/e} vs k f in I^{ks/e}.
  bool b_lhs = false, b_rhs = false;
  /// f in I^{s/e} vs s f in I^{ks/e}, reported for comparison only.
  bool bs_rhs = false;

  bool a_holds() const { return a_lhs == a_rhs; }
  bool b_holds() const { return b_lhs == b_rhs; }
  bool bs_holds() const { return b_lhs == bs_rhs; }
  bool passed() const { return a_holds() && b_holds(); }
};

struct PowerEquivalenceParams {
  std::int64_t m = 1, k = 1, j = 1, s = 1;
};

/// (a) f in I^{m/e} iff (k+1) f in I^{(km+j)/e}, for k <= m and m-k <= j <= m;
/// (b) f in I^{s/e} iff k f in I^{ks/e}.
PowerEquivalenceReport power_equivalences(const RationalPowers& powers, const Exponent& f,
                                          const PowerEquivalenceParams& params);

}  // namespace ratpow
