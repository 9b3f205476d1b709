#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/rational.hpp"

namespace ratpow {

using IntVector = std::vector<std::int64_t>;

/// Rational halfspace normal . X >= threshold with a nonnegative normal.
struct HalfspaceQ {
  RationalVector normal;
  Rational threshold;
};

/// Integral halfspace normal . X >= threshold. Doubles as a monomial
/// valuation whose value on x^alpha is normal . alpha.
struct IntegralHalfspace {
  IntVector normal;
  std::int64_t threshold = 0;

  std::int64_t eval(const Exponent& alpha) const;
  Rational eval(const RationalVector& point) const;
  bool contains(const Exponent& alpha) const { return eval(alpha) >= threshold; }

  friend auto operator<=>(const IntegralHalfspace&, const IntegralHalfspace&) = default;
};

struct ReducedHalfspace {
  IntegralHalfspace halfspace;
  /// original = factor * reduced.
  Rational factor;
};

/// Clears denominators and divides by the gcd of all entries and the
/// threshold. Threshold must be >= 0.
ReducedHalfspace reduce_halfspace(const HalfspaceQ& h);

/// Convex polyhedron with recession cone the nonnegative orthant.
///
/// `facets` lists the non-coordinate facets in reduced integral form;
/// `coordinate_facets` lists the j for which x_j >= 0 is a facet.
struct NewtonPolyhedron {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;
  std::vector<IntegralHalfspace> facets;
  std::vector<int> coordinate_facets;

  bool contains(const RationalVector& point) const;
  bool contains(const Exponent& alpha) const;
  /// Least common multiple of all vertex-coordinate denominators.
  std::int64_t vertex_denominator_lcm() const;
};

/// Extreme rays of the pointed cone {y : r . y >= 0 for every row r}, as
/// primitive integer vectors, by the double-description method.
std::vector<IntVector> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t dim);

/// conv(gens) + orthant.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);
/// {X >= 0 : h(X) >= threshold for all h}. Redundant and duplicate
/// halfspaces are dropped from the facet list.
NewtonPolyhedron polyhedron_from_halfspaces(std::size_t dim, std::span<const IntegralHalfspace> halfspaces);

/// Minimal alpha in N^d with w(alpha) >= w.threshold for every w.
std::vector<Exponent> minimal_points_above(std::span<const IntegralHalfspace> weights);
/// Same with every threshold replaced by the common bound n.
std::vector<Exponent> minimal_points_above(std::span<const IntVector> weights, std::int64_t n);

/// scale * base.
struct ScaledPolyhedron {
  NewtonPolyhedron base;
  Rational scale{1};

  /// alpha in n * scale * base.
  bool contains(const Exponent& alpha, std::int64_t n) const;
};

/// Number of lattice points in n*(intersection of inside) minus the union of
/// n*(each outside). Throws UnboundedRegion when the region escapes every box.
std::int64_t count_region(std::span<const ScaledPolyhedron> inside, std::span<const ScaledPolyhedron> outside,
                          std::int64_t n);

struct Face {
  std::vector<int> tight_facets;       // indices into NewtonPolyhedron::facets
  std::vector<int> tight_coordinates;  // j with x_j = 0 on the face
  std::vector<int> vertex_set;         // indices into NewtonPolyhedron::vertices
  int dim = 0;
  bool compact = false;
};

/// All nonempty proper faces, sorted by (dim, vertex_set).
std::vector<Face> enumerate_faces(const NewtonPolyhedron& p);
/// 1 + maximal dimension of a compact face.
int analytic_spread(const NewtonPolyhedron& p);
int analytic_spread(const MonomialIdeal& ideal);

/// {"vertices": [["1/2",...],...], "facets": [{"normal":[...],"threshold":t},...]}
std::string to_json(const NewtonPolyhedron& p);

}  // namespace ratpow
