#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ratpow/corpus.hpp"
#include "ratpow/filtration.hpp"

using namespace ratpow;
using testutil::I;
using testutil::over;

namespace {

HyperplaneFamily family(std::vector<std::string> vars, std::vector<IntegralHalfspace> hs) {
  return HyperplaneFamily{std::move(vars), std::move(hs)};
}

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

HyperplaneFamily triangle_family() {
  return family(kXYZ, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
}

}  // namespace

TEST_CASE("family_index examples") {
  CHECK(family_index(family(kXY, {{{1, 1}, 1}}), Rational(3, 2)) == over(kXY, "x^2, x*y, y^2"));
  CHECK(family_index(triangle_family(), Rational(2)) == over(kXYZ, "x^2*y^2, x*y*z, x^2*z^2, y^2*z^2"));
  CHECK(family_index(family(kXY, {{{3, 2}, 6}}), Rational(1)) == over(kXY, "x^2, x*y^2, y^3"));
  CHECK_THROWS_AS(family_index(triangle_family(), Rational(0)), DomainError);
  CHECK_THROWS_AS(family_index(triangle_family(), Rational(-1, 2)), DomainError);
}

TEST_CASE("family_to_ideal examples") {
  auto r = family_to_ideal(triangle_family());
  CHECK(r.g == 2);
  CHECK(r.ideal == over(kXYZ, "x^2*y^2, x*y*z, x^2*z^2, y^2*z^2"));
  CHECK(r.f == 1);
  CHECK(r.e == 2);
  const RationalVector half{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(std::find(r.region.vertices.begin(), r.region.vertices.end(), half) != r.region.vertices.end());

  r = family_to_ideal(family(kXY, {{{3, 2}, 6}}));
  CHECK(r.g == 1);
  CHECK(r.ideal == over(kXY, "x^2, y^3"));
  CHECK(r.f == 6);
  CHECK(r.e == 6);

  r = family_to_ideal(family(kXY, {{{1, 1}, 1}}));
  CHECK(r.g == 1);
  CHECK(r.ideal == over(kXY, "x, y"));
  CHECK(r.f == 1);
  CHECK(r.e == 1);
}

TEST_CASE("family canonicalization drops redundant and duplicate halfspaces") {
  const auto r = family_to_ideal(family(kXY, {{{1, 1}, 1}, {{2, 2}, 2}, {{1, 2}, 1}}));
  CHECK(r.halfspaces.size() == 1);
  CHECK(r.ideal == over(kXY, "x, y"));
}

TEST_CASE("family JSON") {
  const auto f = parse_family_json(R"({"vars":["x","y","z"],"halfspaces":[{"normal":[1,1,0],"threshold":1}]})");
  CHECK(f.dim() == 3);
  CHECK(parse_family_json(to_json(f)).halfspaces == f.halfspaces);
  CHECK_THROWS_AS(parse_family_json(R"({"vars":["x"],"halfspaces":[{"normal":[1,1],"threshold":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_family_json(R"({"vars":["x"],"halfspaces":[{"normal":[0],"threshold":1}]})"), ParseError);
  CHECK_THROWS_AS(parse_family_json(R"({"vars":["x"],"halfspaces":[]})"), ParseError);
}

TEST_CASE("symbolic_power examples") {
  const auto tri = I("x*y, y*z, z*x");
  CHECK(symbolic_power(tri, 2) == over(kXYZ, "x^2*y^2, x*y*z, x^2*z^2, y^2*z^2"));
  CHECK(symbolic_power(tri, 3) == over(kXYZ, "x^3*y^3, x^3*z^3, y^3*z^3, x^2*y^2*z, x^2*y*z^2, x*y^2*z^2"));
  CHECK(symbolic_power(I("x"), 4) == I("x^4"));
  CHECK_THROWS_AS(symbolic_power(I("x^2"), 2), DomainError);
}

TEST_CASE("symbolic_generator_ideal examples") {
  auto s = symbolic_generator_ideal(I("x*y, y*z, z*x"), 4);
  CHECK(s.g == 2);
  CHECK(s.ideal == over(kXYZ, "x^2*y^2, x*y*z, x^2*z^2, y^2*z^2"));
  s = symbolic_generator_ideal(I("x*y, y*z"));
  CHECK(s.g == 1);
  CHECK(s.ideal == I("x*y, y*z"));
  s = symbolic_generator_ideal(I("x, y"));
  CHECK(s.g == 1);
  CHECK(s.ideal == I("x, y"));
  CHECK_THROWS_AS(symbolic_generator_ideal(I("x^2, y")), DomainError);
}

TEST_CASE("check_splitting examples") {
  SplittingOptions opt;
  opt.n_max = 4;
  CHECK(check_splitting(RationalPowers(I("x^2, y^3")), 2, opt).passed);
  CHECK(check_splitting(RationalPowers(I("x*y, y*z, z*x")), 3, opt).passed);

  // ordinary powers I_k = (x,y)^{2k}
  const auto m2 = I("x^2, x*y, y^2");
  FiltrationAccessor ordinary = [&](std::int64_t k) { return power(m2, static_cast<int>(k)); };
  SplittingOptions one;
  one.n_min = one.n_max = 1;
  one.j_min = one.j_max = 2;
  CHECK(check_splitting(ordinary, 2, one).passed);
  // the j = 1 slice fails: 2 (3,0) lies in (x,y)^6 but x^3 is not in (x,y)^4
  one.j_min = one.j_max = 1;
  const auto r = check_splitting(ordinary, 2, one);
  REQUIRE_FALSE(r.passed);
  CHECK(r.counterexample->n == 1);
  CHECK(r.counterexample->j == 1);
  CHECK(r.counterexample->beta.degree() == 3);

  CHECK_THROWS_AS(check_splitting(RationalPowers(I("x")), 1, opt), DomainError);
}

TEST_CASE("property: both splitting paths agree on rational powers") {
  for (const auto& a : testutil::corpus(40, 31)) {
    RationalPowers P(a);
    FiltrationAccessor acc = [&](std::int64_t k) { return P.step(k); };
    for (std::int64_t m : {2, 3}) {
      SplittingOptions opt;
      opt.n_max = 3;
      CHECK(check_splitting(P, m, opt).passed == check_splitting(acc, m, opt).passed);
    }
  }
}

TEST_CASE("property: rational-power filtrations split for m in {2,3,5}") {
  for (const auto& a : testutil::corpus(200)) {
    RationalPowers P(a);
    for (std::int64_t m : {2, 3, 5}) {
      SplittingOptions opt;
      opt.n_max = 4;
      CAPTURE(a.str());
      CHECK(check_splitting(P, m, opt).passed);
    }
  }
}

TEST_CASE("property: hyperplane families") {
  for (const auto& F : random_families(17, 50)) {
    const auto R = family_to_ideal(F);
    CAPTURE(to_json(F));
    CHECK((R.f * R.g) % R.e == 0);
    RationalPowers J(R.ideal);
    bool unit_factors = true;
    for (auto m : R.reduction_factors) {
      CHECK(R.g % m == 0);
      unit_factors = unit_factors && m == 1;
    }
    for (std::int64_t p = 1; p <= 10; ++p) {
      const Rational sigma(p * 5, 10 + (p % 3));  // ten values in (0, 5]
      const auto Is = family_index(F, sigma);
      CHECK(Is == J.power(RationalIndex(sigma / Rational(R.g))));
      CHECK(Is == family_index(F, Rational((sigma * Rational(R.f)).ceil(), R.f)));
      if (unit_factors) CHECK(J.power(RationalIndex(sigma)) == family_index(F, Rational(R.g) * sigma));
    }
    if (unit_factors) CHECK(R.e == R.f * R.g);
    for (std::int64_t n = 1; n <= 12; ++n) CHECK(J.step(n) == family_index(F, Rational(R.g * n, R.e)));
  }
}

TEST_CASE("property: family membership matches the defining inequalities") {
  for (const auto& F : random_families(23, 20)) {
    for (const Rational sigma : {Rational(1, 2), Rational(1), Rational(7, 3)}) {
      const auto Is = family_index(F, sigma);
      oracle::for_box(F.dim(), 5, [&](const Exponent& a) {
        bool in = true;
        for (const auto& h : F.halfspaces) {
          std::int64_t s = 0;
          for (std::size_t j = 0; j < a.size(); ++j) s += h.normal[j] * a[j];
          in = in && Rational(s) >= sigma * Rational(h.threshold);
        }
        CHECK(in == Is.contains(a));
      });
    }
  }
}

TEST_CASE("property: symbolic powers are rational powers of J") {
  for (const auto& a : testutil::squarefree_corpus(40)) {
    const auto s = symbolic_generator_ideal(a, 0);
    RationalPowers P(s.ideal);
    for (int n = 1; n <= 12; ++n) {
      CAPTURE(a.str());
      CHECK(symbolic_power(a, n) == P.power(RationalIndex(n, s.g)));
    }
  }
}
