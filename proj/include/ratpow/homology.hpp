#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/rational_power.hpp"

namespace ratpow {

/// Finite simplicial complex on a ground set of at most 16 vertices, faces as
/// bitmasks. The void complex has no faces at all; {∅} has only the empty face.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::uint32_t ground);
  static SimplicialComplex irrelevant(std::uint32_t ground);
  /// Downward closure of the given faces.
  static SimplicialComplex from_facets(std::uint32_t ground, const std::vector<std::uint32_t>& facets);
  /// `faces` must already be closed under taking subsets.
  static SimplicialComplex from_faces(std::uint32_t ground, std::vector<std::uint32_t> faces);

  std::uint32_t ground() const { return ground_; }
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  std::vector<std::uint32_t> facets() const;
  bool is_void() const { return faces_.empty(); }
  bool contains(std::uint32_t face) const;
  /// Largest face size minus one; -2 for the void complex.
  int dimension() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::uint32_t ground_ = 0;
  std::vector<std::uint32_t> faces_;  // sorted
};

/// Reduced Betti numbers, entry k+1 holding dim H~_k for k = -1 .. dim K.
/// `prime` = 0 means the rationals, otherwise the field with that many elements.
std::vector<int> reduced_betti_numbers(const SimplicialComplex& k, int prime = 0);
int reduced_homology(const SimplicialComplex& k, int i, int prime = 0);
/// sum (-1)^i f_i over faces, empty face included.
int reduced_euler_characteristic(const SimplicialComplex& k);

/// Degree alpha up to the depth of its negative part: G = {i : alpha_i < 0}
/// and beta = alpha^+.
struct DegreeKey {
  std::uint32_t G = 0;
  Exponent beta;

  friend bool operator==(const DegreeKey&, const DegreeKey&) = default;
  friend bool operator<(const DegreeKey& a, const DegreeKey& b) {
    if (a.G != b.G) return a.G < b.G;
    return a.beta.entries() < b.beta.entries();
  }
};

/// Faces F of [d] - G with x^beta outside the ideal obtained by setting the
/// variables in F and G to 1.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const DegreeKey& key);

struct CohomologyTable {
  std::size_t dim = 0;
  /// (i, key) -> dim H^i_m(R/I) in that degree; zero entries omitted.
  std::map<std::pair<int, DegreeKey>, int> entries;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

struct LocalCohomologyOptions {
  int prime = 0;
  bool stability_check = true;
};

struct LocalCohomology {
  CohomologyTable table;
  int depth = 0;
  /// a_i for i = 0..d; empty when H^i vanishes.
  std::vector<std::optional<int>> a_invariants;
  int regularity = 0;  // reg(R/I)
};

LocalCohomology local_cohomology_table(const MonomialIdeal& ideal, const LocalCohomologyOptions& options = {});

/// Rows "i,G,beta,dim" with G 1-based and both sets ';'-separated.
std::string table_csv(const CohomologyTable& table);

struct LcLength {
  bool finite = true;
  std::int64_t length = 0;
};

LcLength lc_length(const LocalCohomology& lc, int i);
LcLength lc_length(const MonomialIdeal& ideal, int i, const LocalCohomologyOptions& options = {});
/// lambda(R / I^{n/e}) by lattice counting; requires an m-primary ideal.
std::int64_t colength_lattice(const RationalPowers& powers, std::int64_t n);

struct BettiTable {
  std::size_t dim = 0;
  /// (i, alpha) -> beta_{i,alpha}(I); zero entries omitted.
  std::map<std::pair<int, Exponent>, int> entries;
  int projective_dimension = 0;  // of I
  int depth = 0;                 // of R/I
  int regularity = 0;            // of R/I
  int ideal_regularity() const { return regularity + 1; }
  /// Total Betti number beta_i(I).
  int total(int i) const;
};

BettiTable betti_table(const MonomialIdeal& ideal, int prime = 0);

}  // namespace ratpow
