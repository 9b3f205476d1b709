#include "ratpow/rational.hpp"

#include <limits>
#include <ostream>
#include <utility>

namespace ratpow {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("64-bit overflow in exact arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Reduced {
  std::int64_t num;
  std::int64_t den;
};

Reduced reduce(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {narrow(num), narrow(den)};
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in multiplication");
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  return checked_mul(a / g < 0 ? -(a / g) : a / g, b < 0 ? -b : b);
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (std::int64_t v : values) g = std::gcd(g, v);
  return g;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Rational::Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

void Rational::assign(__int128 num, __int128 den) {
  Reduced r = reduce(num, den);
  num_ = r.num;
  den_ = r.den;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    assign(static_cast<__int128>(num_) + o.num_, den_);
  } else {
    assign(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                         static_cast<__int128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  assign(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  assign(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
      if (s.size() == 1) throw ParseError("bad rational '" + std::string(text) + "'");
    }
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad rational '" + std::string(text) + "'");
      v = v * 10 + (s[i] - '0');
      if (v > std::numeric_limits<std::int64_t>::max()) throw ParseError("rational out of range");
    }
    return static_cast<std::int64_t>(negative ? -v : v);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

int rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].sign() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].sign() == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

bool solve(std::vector<RationalVector> a, RationalVector b, RationalVector& x) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].sign() == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].sign() == 0) continue;
      Rational factor = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= factor * a[c][k];
      b[i] -= factor * b[c];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace ratpow
