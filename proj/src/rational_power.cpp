#include "ratpow/rational_power.hpp"

#include <algorithm>

namespace ratpow {

RationalIndex::RationalIndex(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("rational index needs a positive denominator");
  if (num < 0) throw DomainError("rational index must be nonnegative");
  value_ = Rational(num, den);
}

RationalIndex::RationalIndex(const Rational& r) : RationalIndex(r.num(), r.den()) {}

RationalIndex RationalIndex::parse(std::string_view text) {
  Rational r = Rational::parse(text);
  if (r.sign() < 0) throw ParseError("rational index must be nonnegative");
  return RationalIndex(r);
}

ReesData rees_valuations(const MonomialIdeal& ideal) {
  NewtonPolyhedron np = newton_polyhedron(ideal);
  ReesData out;
  for (const auto& f : np.facets) {
    out.valuations.push_back({f.normal, f.threshold});
    out.e = lcm64(out.e, f.threshold);
  }
  for (const auto& v : out.valuations) {
    IntVector w = v.weights;
    const std::int64_t k = out.e / v.value_on_ideal;
    for (auto& a : w) a = checked_mul(a, k);
    out.normalized_weights.push_back(std::move(w));
  }
  return out;
}

RationalPowers::RationalPowers(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  if (!ideal_.is_proper_nonzero()) throw DomainError("rational powers require a proper nonzero ideal");
  rees_ = rees_valuations(ideal_);
}

std::int64_t RationalPowers::canonical_step(const RationalIndex& idx) const {
  return ceil_div(checked_mul(rees_.e, idx.num()), idx.den());
}

bool RationalPowers::member_step(std::int64_t n, const Exponent& m) const {
  if (m.size() != ideal_.dim()) throw DomainError("dimension mismatch in rational-power membership");
  for (const auto& w : rees_.normalized_weights) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) s = checked_add(s, checked_mul(w[j], m[j]));
    if (s < n) return false;
  }
  return true;
}

bool RationalPowers::member(const RationalIndex& idx, const Exponent& m) const {
  return member_step(canonical_step(idx), m);
}

MonomialIdeal RationalPowers::step(std::int64_t n) const {
  if (n <= 0) return MonomialIdeal::unit(ideal_.var_names());
  return MonomialIdeal::from_generators(ideal_.var_names(), minimal_points_above(rees_.normalized_weights, n));
}

MonomialIdeal RationalPowers::power(const RationalIndex& idx) const { return step(canonical_step(idx)); }

bool member_rational(const MonomialIdeal& ideal, const RationalIndex& idx, const Exponent& m) {
  if (m.size() != ideal.dim()) throw DomainError("dimension mismatch in rational-power membership");
  if (idx.num() == 0) return true;
  return RationalPowers(ideal).member(idx, m);
}

MonomialIdeal rational_power(const MonomialIdeal& ideal, const RationalIndex& idx) {
  if (idx.num() == 0) return MonomialIdeal::unit(ideal.var_names());
  return RationalPowers(ideal).power(idx);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) { return rational_power(ideal, RationalIndex(1, 1)); }

}  // namespace ratpow
