#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/rational.hpp"

namespace ratpow {

/// Monomial valuation v(x^alpha) = weights . alpha with v(I) = value_on_ideal.
struct MonomialValuation {
  IntVector weights;
  std::int64_t value_on_ideal = 0;
};

/// Index a/b of a rational power, kept in lowest terms.
class RationalIndex {
 public:
  RationalIndex() = default;
  RationalIndex(std::int64_t num, std::int64_t den);
  explicit RationalIndex(const Rational& r);

  std::int64_t num() const { return value_.num(); }
  std::int64_t den() const { return value_.den(); }
  const Rational& value() const { return value_; }
  std::string str() const { return std::to_string(num()) + "/" + std::to_string(den()); }
  static RationalIndex parse(std::string_view text);

  friend bool operator==(const RationalIndex&, const RationalIndex&) = default;

 private:
  Rational value_{0};
};

/// Rees valuations of a monomial ideal together with the canonical
/// denominator e = lcm v(I) and the integer weights w = (e / v(I)) v, so that
/// x^alpha lies in I^{n/e} exactly when w(alpha) >= n for every w.
struct ReesData {
  std::vector<MonomialValuation> valuations;
  std::int64_t e = 1;
  std::vector<IntVector> normalized_weights;
};

ReesData rees_valuations(const MonomialIdeal& ideal);

/// Rational-power filtration {I^{n/e}} of a fixed ideal. Holds the Rees data
/// so repeated queries do not redo the polyhedral computation.
class RationalPowers {
 public:
  explicit RationalPowers(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  const ReesData& rees() const { return rees_; }
  std::int64_t e() const { return rees_.e; }

  /// n with I^{a/b} = I^{n/e}, that is ceil(e a / b).
  std::int64_t canonical_step(const RationalIndex& idx) const;
  bool member(const RationalIndex& idx, const Exponent& m) const;
  /// Membership in I^{n/e}.
  bool member_step(std::int64_t n, const Exponent& m) const;
  MonomialIdeal power(const RationalIndex& idx) const;
  /// I^{n/e}.
  MonomialIdeal step(std::int64_t n) const;

 private:
  MonomialIdeal ideal_;
  ReesData rees_;
};

bool member_rational(const MonomialIdeal& ideal, const RationalIndex& idx, const Exponent& m);
MonomialIdeal rational_power(const MonomialIdeal& ideal, const RationalIndex& idx);
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

}  // namespace ratpow
