#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ratpow/homology.hpp"

using namespace ratpow;
using testutil::I;
using testutil::over;

TEST_CASE("reduced homology conventions") {
  const auto circle = SimplicialComplex::from_facets(0b111, {0b011, 0b101, 0b110});
  CHECK(reduced_homology(circle, 1) == 1);
  CHECK(reduced_homology(circle, 0) == 0);
  const auto irr = SimplicialComplex::irrelevant(0b111);
  CHECK(reduced_homology(irr, -1) == 1);
  CHECK(reduced_homology(irr, 0) == 0);
  const auto simplex = SimplicialComplex::from_facets(0b111, {0b111});
  for (int i = -1; i <= 3; ++i) CHECK(reduced_homology(simplex, i) == 0);
  const auto v = SimplicialComplex::void_complex(0b111);
  for (int i = -1; i <= 3; ++i) CHECK(reduced_homology(v, i) == 0);
  const auto two_points = SimplicialComplex::from_facets(0b11, {0b01, 0b10});
  CHECK(reduced_homology(two_points, 0) == 1);
}

TEST_CASE("homology over a prime field sees torsion-free complexes the same way") {
  const auto circle = SimplicialComplex::from_facets(0b111, {0b011, 0b101, 0b110});
  CHECK(reduced_homology(circle, 1, 2) == 1);
  CHECK(reduced_homology(circle, 1, 3) == 1);
}

TEST_CASE("property: Euler characteristic of random complexes") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    const std::uint32_t ground = (1u << n) - 1;
    std::vector<std::uint32_t> facets;
    const int r = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < r; ++i) facets.push_back(std::uniform_int_distribution<std::uint32_t>(0, ground)(rng));
    const auto k = SimplicialComplex::from_facets(ground, facets);
    int chi = 0;
    for (int i = -1; i <= n; ++i) chi += (i % 2 == 0 ? 1 : -1) * reduced_homology(k, i);
    int faces = 0;
    for (auto f : k.faces()) faces += (std::popcount(f) % 2 == 1) ? 1 : -1;
    CHECK(chi == faces);
    CHECK(chi == reduced_euler_characteristic(k));
  }
}

TEST_CASE("degree complex examples") {
  auto k = degree_complex(I("x^2, x*y"), DegreeKey{0, Exponent{1, 0}});
  CHECK(k == SimplicialComplex::irrelevant(0b11));
  k = degree_complex(I("x"), DegreeKey{0, Exponent{0}});
  CHECK(k == SimplicialComplex::irrelevant(0b1));
  k = degree_complex(I("x*y, y*z, z*x"), DegreeKey{0b100, Exponent{0, 0, 0}});
  CHECK(k == SimplicialComplex::irrelevant(0b011));
  CHECK_THROWS_AS(degree_complex(I("x, y"), DegreeKey{0b01, Exponent{1, 0}}), DomainError);
}

TEST_CASE("local cohomology examples") {
  auto lc = local_cohomology_table(I("x^2, x*y"));
  CHECK(lc.depth == 0);
  CHECK(lc.table.entries.at({0, DegreeKey{0, Exponent{1, 0}}}) == 1);
  int h0 = 0;
  for (const auto& [k, v] : lc.table.entries) h0 += k.first == 0 ? v : 0;
  CHECK(h0 == 1);
  CHECK(lc_length(lc, 0).finite);
  CHECK(lc_length(lc, 0).length == 1);

  CHECK(local_cohomology_table(I("x*y, y*z, z*x")).depth == 1);
  lc = local_cohomology_table(I("x"));
  CHECK(lc.depth == 0);
  CHECK(lc.regularity == 0);
  CHECK(table_csv(local_cohomology_table(I("x^2, x*y")).table) == "i,G,beta,dim\n0,,1;0,1\n1,2,0;0,1\n");
}

TEST_CASE("lc_length examples") {
  const auto closure = testutil::over({"x", "y"}, "x^2, x*y^2, y^3");
  auto l = lc_length(closure, 0);
  CHECK(l.finite);
  CHECK(l.length == 5);
  l = lc_length(I("x^2, x*y"), 0);
  CHECK(l.finite);
  CHECK(l.length == 1);
  l = lc_length(over({"x", "y"}, "x"), 1);
  CHECK_FALSE(l.finite);
}

TEST_CASE("colength by lattice counting") {
  RationalPowers P(I("x^2, y^3"));
  CHECK(colength_lattice(P, 6) == 5);
  CHECK(colength_lattice(P, 12) == 16);
  CHECK_THROWS_AS(colength_lattice(RationalPowers(I("x*y, y*z, z*x")), 2), DomainError);
}

TEST_CASE("Betti table examples") {
  auto b = betti_table(I("x*y, y*z, z*x"));
  CHECK(b.total(0) == 3);
  CHECK(b.total(1) == 2);
  CHECK(b.entries.at({1, Exponent{1, 1, 1}}) == 2);
  CHECK(b.depth == 1);
  CHECK(b.regularity == 1);
  b = betti_table(I("x^2, x*y"));
  CHECK(b.total(0) == 2);
  CHECK(b.total(1) == 1);
  CHECK(b.entries.at({1, Exponent{2, 1}}) == 1);
  CHECK(b.depth == 0);
  b = betti_table(I("x"));
  CHECK(b.total(0) == 1);
  CHECK(b.projective_dimension == 0);
  CHECK(b.depth == 0);
}

TEST_CASE("property: Takayama and Betti agree on depth and regularity") {
  for (const auto& a : testutil::corpus(200)) {
    const auto lc = local_cohomology_table(a);
    const auto b = betti_table(a);
    CAPTURE(a.str());
    CHECK(lc.depth == b.depth);
    CHECK(lc.regularity == b.regularity);
  }
}

TEST_CASE("property: m-primary ideals have H^0 of length the colength and nothing else") {
  for (const auto& a : testutil::corpus(200)) {
    bool primary = true;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      bool pure = false;
      for (const auto& g : a.gens()) pure = pure || g.support() == (1u << j);
      primary = primary && pure;
    }
    if (!primary) continue;
    const auto lc = local_cohomology_table(a);
    std::int64_t h0 = 0;
    for (const auto& [k, v] : lc.table.entries) {
      CHECK(k.first == 0);
      CHECK(k.second.G == 0u);
      h0 += v;
    }
    CHECK(h0 == oracle::colength(a));
  }
}

TEST_CASE("property: the table survives doubling the scan box") {
  for (const auto& a : testutil::corpus(40, 13)) {
    LocalCohomologyOptions no_check;
    no_check.stability_check = false;
    const auto base = local_cohomology_table(a, no_check);
    const auto checked = local_cohomology_table(a);
    CHECK(base.table == checked.table);
  }
}

TEST_CASE("property: prime field 2 agrees with the rationals on the corpus") {
  for (const auto& a : testutil::corpus(60, 19)) {
    LocalCohomologyOptions p2;
    p2.prime = 2;
    CHECK(local_cohomology_table(a).table == local_cohomology_table(a, p2).table);
    CHECK(betti_table(a).entries == betti_table(a, 2).entries);
  }
}

TEST_CASE("property: face projection commutes with rational powers") {
  for (const auto& a : testutil::corpus(60, 29)) {
    RationalPowers P(a);
    for (std::uint32_t F = 1; F + 1 < (1u << a.dim()); ++F) {
      const auto aF = a.projected(F);
      for (std::int64_t n = 1; n <= 6; ++n) {
        const RationalIndex idx(n, P.e());
        const auto lhs = P.power(idx).projected(F);
        CAPTURE(a.str());
        if (aF.is_unit()) {
          CHECK(lhs.is_unit());
        } else {
          CHECK(lhs == RationalPowers(aF).power(idx));
        }
      }
    }
  }
}
