#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratpow/errors.hpp"

namespace ratpow {

/// Checked 64-bit helpers. All of them throw OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t gcd_of(std::span<const std::int64_t> values);

/// Floor and ceiling of a / b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Exact rational number p/q with q > 0 and gcd(p, q) = 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const { return floor_div(num_, den_); }
  std::int64_t ceil() const { return ceil_div(num_, den_); }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Accepts "p", "-p" and "p/q".
  static Rational parse(std::string_view text);

 private:
  void assign(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

/// Rank of a rational matrix by exact Gaussian elimination.
int rank(std::vector<RationalVector> rows);

/// Solves the square system A x = b exactly; returns false if A is singular.
bool solve(std::vector<RationalVector> a, RationalVector b, RationalVector& x);

}  // namespace ratpow
