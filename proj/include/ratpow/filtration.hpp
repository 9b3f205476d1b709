#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/rational_power.hpp"

namespace ratpow {

/// Family of monomial ideals cut out by halfspaces: x^alpha lies in I_sigma
/// iff a_i . alpha >= sigma f_i for every halfspace (a_i, f_i) in reduced
/// integral form.
struct HyperplaneFamily {
  std::vector<std::string> vars;
  std::vector<IntegralHalfspace> halfspaces;

  std::size_t dim() const { return vars.size(); }
};

HyperplaneFamily parse_family_json(std::string_view json_text);
std::string to_json(const HyperplaneFamily& family);

/// I_sigma for a positive rational sigma.
MonomialIdeal family_index(const HyperplaneFamily& family, const Rational& sigma);

/// J, g and the indexing constants relating {I_sigma} to the rational powers
/// of J: I_sigma = J^{sigma/g}, I_sigma = I_{ceil(f sigma)/f}, and
/// J^{n/e} = I_{g n / e}.
struct FamilyResult {
  MonomialIdeal ideal;  // J
  std::int64_t g = 1;
  std::int64_t f = 1;
  std::int64_t e = 1;
  /// Canonical irredundant halfspaces, aligned with reduction_factors.
  std::vector<IntegralHalfspace> halfspaces;
  std::vector<std::int64_t> reduction_factors;
  /// C_1, the region at sigma = 1.
  NewtonPolyhedron region;
};

FamilyResult family_to_ideal(const HyperplaneFamily& family);

/// I^{(n)} as the intersection of p^n over the minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n);

struct SymbolicGenerator {
  std::int64_t g = 1;
  MonomialIdeal ideal;  // I^{(g)}
  FamilyResult family;
};

/// Builds the minimal-prime family of a squarefree ideal and returns (g, J)
/// with I^{(n)} = J^{n/g}. Certifies J = I^{(g)} and the identity for
/// n <= certify_up_to; throws InternalError if a certificate fails.
SymbolicGenerator symbolic_generator_ideal(const MonomialIdeal& ideal, int certify_up_to = 2);

/// Indexed ideal sequence k -> I_k.
using FiltrationAccessor = std::function<MonomialIdeal(std::int64_t)>;

struct SplittingOptions {
  std::int64_t n_min = 1;
  std::int64_t n_max = 4;
  /// j range; j_max = 0 means m.
  std::int64_t j_min = 1;
  std::int64_t j_max = 0;
};

struct SplittingCounterexample {
  std::int64_t n = 0;
  std::int64_t j = 0;
  Exponent beta;  // m beta in I_{nm+j}, beta not in I_{n+1}
};

struct SplittingReport {
  bool passed = true;
  std::int64_t checked = 0;
  std::optional<SplittingCounterexample> counterexample;
};

/// Verifies that every minimal beta with m beta in I_{nm+j} lies in I_{n+1}.
/// The minimal such beta are the componentwise ceilings of g/m over the
/// generators g of I_{nm+j}.
SplittingReport check_splitting(const FiltrationAccessor& filtration, std::int64_t m,
                                const SplittingOptions& options = {});

/// Rational-power specialization: the minimal beta are the minimal points of
/// w(beta) >= ceil((nm+j)/m) for the normalized Rees weights.
SplittingReport check_splitting(const RationalPowers& powers, std::int64_t m, const SplittingOptions& options = {});

}  // namespace ratpow
