#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ratpow/errors.hpp"

namespace ratpow {

/// Exponent vector of a monomial, an element of N^d.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t dim) : e_(dim, 0) {}
  Exponent(std::initializer_list<int> entries);
  explicit Exponent(std::vector<int> entries);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<int>& entries() const { return e_; }

  std::int64_t degree() const;
  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const Exponent& other) const;
  bool is_squarefree() const;
  /// Bitmask of nonzero coordinates (d <= 32).
  std::uint32_t support() const;

  Exponent operator+(const Exponent& o) const;
  Exponent scaled(int k) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  /// Graded order: total degree first, then descending lexicographic on the
  /// tuple so that x^2 sorts before xy before y^2.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  std::vector<int> e_;
};

Exponent componentwise_max(const Exponent& a, const Exponent& b);

/// Antichain of componentwise-minimal elements, in canonical graded order.
std::vector<Exponent> minimal_generators(std::vector<Exponent> gens);

/// Monomial prime ideal generated by the variables in `support` (bitmask).
struct MonomialPrime {
  std::uint32_t support = 0;

  std::vector<int> variables() const;
  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

/// Monomial ideal of K[x_1..x_d] stored by its minimal generators.
///
/// The unit ideal is the single generator 0; the zero ideal has no
/// generators and sets `is_zero()`. Values are immutable.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Minimizes and sorts `gens`. An empty list yields the zero ideal.
  static MonomialIdeal from_generators(std::vector<std::string> vars, std::vector<Exponent> gens);
  static MonomialIdeal from_generators(std::size_t dim, std::vector<Exponent> gens);
  static MonomialIdeal unit(std::vector<std::string> vars);
  static MonomialIdeal zero(std::vector<std::string> vars);

  std::size_t dim() const { return vars_.size(); }
  const std::vector<Exponent>& gens() const { return gens_; }
  const std::vector<std::string>& var_names() const { return vars_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  /// True for nonzero proper ideals, the domain of the polyhedral operations.
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  bool contains(const Exponent& m) const;
  /// Componentwise maximum of the generators.
  Exponent lcm() const;
  /// Largest exponent of each variable among the generators.
  Exponent max_exponents() const { return lcm(); }

  /// Same ideal with variables in `mask` set to 1.
  MonomialIdeal projected(std::uint32_t mask) const;

  std::string str() const;
  std::string monomial_str(const Exponent& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_ && a.vars_.size() == b.vars_.size();
  }

 private:
  std::vector<std::string> vars_;
  std::vector<Exponent> gens_;
};

/// Default variable names: x,y,z,w for d <= 4, x1..xd otherwise.
std::vector<std::string> default_var_names(std::size_t dim);

/// Parses "x^2*y, y^3". With empty `vars` the variables are taken in order
/// of first appearance.
MonomialIdeal parse_ideal(std::string_view text, std::vector<std::string> vars = {});
/// Parses {"vars": [...], "gens": [[...], ...]}.
MonomialIdeal parse_ideal_json(std::string_view json_text);
/// Dispatches on the first non-blank character: '{' selects JSON. A plain
/// text document may start with a line "vars: x, y, z".
MonomialIdeal parse_ideal_document(std::string_view text);
std::string to_json(const MonomialIdeal& ideal);

bool contains(const MonomialIdeal& ideal, const Exponent& m);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : x^m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Exponent& m);
/// Every generator of `a` lies in `b`.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal prime_power(std::size_t dim, const MonomialPrime& prime, int n);

/// Minimal vertex covers of the generator hypergraph of a squarefree ideal.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);
/// Monomial primes P = (I : m), m not in I.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

struct AssociatedPrimeWitness {
  MonomialPrime prime;
  Exponent witness;  // divides lcm(gens), not in I, (I : witness) = prime
};
std::vector<AssociatedPrimeWitness> associated_primes_with_witnesses(const MonomialIdeal& ideal);

std::string prime_str(const MonomialPrime& p, const std::vector<std::string>& vars);

}  // namespace ratpow
