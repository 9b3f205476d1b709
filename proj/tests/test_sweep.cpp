#include "doctest.h"
#include "helpers.hpp"
#include "ratpow/errors.hpp"
#include "ratpow/homology.hpp"
#include "ratpow/rational_power.hpp"
#include "ratpow/stanley.hpp"
#include "ratpow/sweep.hpp"

using namespace ratpow;
using testutil::I;

namespace {

SweepConfig config(const std::string& text, Invariant inv, std::int64_t n_max) {
  SweepConfig c;
  c.ideal = I(text);
  c.invariant = inv;
  c.n_max = n_max;
  return c;
}

std::vector<ExperimentRecord> per_n(const std::vector<ExperimentRecord>& recs, const std::string& name) {
  std::vector<ExperimentRecord> out;
  for (const auto& r : recs) {
    if (r.invariant == name) out.push_back(r);
  }
  return out;
}

const ExperimentRecord& find(const std::vector<ExperimentRecord>& recs, const std::string& name) {
  for (const auto& r : recs) {
    if (r.invariant == name) return r;
  }
  FAIL("no record " << name);
  return recs.front();
}

}  // namespace

TEST_CASE("triangle depth sweep stabilizes at the predicted value") {
  const auto recs = run_sweep(config("x*y, y*z, z*x", Invariant::Depth, 12));
  const auto depth = per_n(recs, "depth");
  REQUIRE(depth.size() == 12);
  CHECK(depth[3].index == "4/2");
  CHECK(depth[3].value == "0");
  CHECK(depth.back().value == "0");
  CHECK(find(recs, "depth_limit_predicted").value == "0");
  CHECK(find(recs, "depth_stabilized").value == "0");
  CHECK(find(recs, "depth_stabilized").n == 6);
}

TEST_CASE("triangle symbolic depth sweep") {
  auto cfg = config("x*y, y*z, z*x", Invariant::Depth, 12);
  cfg.mode = SweepMode::Symbolic;
  const auto recs = run_sweep(cfg);
  for (const auto& r : per_n(recs, "depth")) CHECK(r.value == "1");
  CHECK(find(recs, "depth_limit_predicted").value == "1");
  CHECK(find(recs, "depth_stabilized").value == "1");
  CHECK(per_n(recs, "depth")[2].index == "3/2");
}

TEST_CASE("lclen sweep on (x^2, y^3)") {
  auto cfg = config("x^2, y^3", Invariant::Lclen, 12);
  cfg.n_min = 6;
  cfg.n_step = 6;
  const auto recs = run_sweep(cfg);
  const auto l = per_n(recs, "lclen_i0");
  REQUIRE(l.size() == 2);
  CHECK(l[0].index == "6/6");
  CHECK(l[0].value == "5");
  CHECK(l[1].value == "16");
  // (16 - 5) / (144 - 36)
  CHECK(find(recs, "lclen_i0_density").value == "11/108");
  CHECK(emit_csv({l[0]}) == "n,index,invariant,value,ms\n6,6/6,lclen_i0,5,0.000\n");
}

TEST_CASE("lclen reports infinite lengths") {
  auto cfg = config("x*y, y*z, z*x", Invariant::Lclen, 3);
  cfg.lc_index = 1;
  const auto recs = run_sweep(cfg);
  for (const auto& r : per_n(recs, "lclen_i1")) CHECK(r.value == "inf");
}

TEST_CASE("reg sweep and slope") {
  const auto recs = run_sweep(config("x*y, y*z, z*x", Invariant::Reg, 12));
  const auto reg = per_n(recs, "reg");
  CHECK(reg[0].value == "2");
  CHECK(reg[1].value == "2");
  CHECK(find(recs, "reg_slope").value == "1");
}

TEST_CASE("ass and sdepth sweeps") {
  auto recs = run_sweep(config("x*y, y*z, z*x", Invariant::Ass, 8));
  auto ass = per_n(recs, "ass");
  CHECK(ass[0].value == "(x y) (x z) (y z)");
  CHECK(ass[3].value == "(x y) (x z) (y z) (x y z)");
  CHECK(find(recs, "ass_stabilized").n == 6);
  CHECK(find(recs, "ass_union").value == "(x y) (x z) (y z) (x y z)");

  recs = run_sweep(config("x*y, y*z, z*x", Invariant::Sdepth, 6));
  std::vector<std::string> got;
  for (const auto& r : per_n(recs, "sdepth")) got.push_back(r.value);
  CHECK(got == std::vector<std::string>{"1", "1", "1", "0", "1", "0"});
  CHECK(find(recs, "sdepth_stabilized").value == "0");
}

TEST_CASE("gens sweep lists generators") {
  const auto recs = run_sweep(config("x^2, y^3", Invariant::Gens, 6));
  CHECK(per_n(recs, "gens")[5].value == "x^2 x*y^2 y^3");
}

TEST_CASE("emitters") {
  CHECK(emit_csv({}) == "n,index,invariant,value,ms\n");
  CHECK(emit_json({}) == "[]\n");
  const std::vector<ExperimentRecord> one{{4, "4/2", "depth", "0", 0}};
  CHECK(emit_csv(one) == "n,index,invariant,value,ms\n4,4/2,depth,0,0.000\n");
  const std::vector<ExperimentRecord> quoted{{1, "1/1", "ass", "(x y), z", 1.5}};
  CHECK(emit_csv(quoted) == "n,index,invariant,value,ms\n1,1/1,ass,\"(x y), z\",1.500\n");
  CHECK(parse_records_json(emit_json(quoted)) == quoted);
  CHECK_THROWS_AS(parse_records_json("{"), ParseError);
  CHECK_THROWS_AS(parse_records_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_records_json("[{\"n\": 1}]"), ParseError);
}

TEST_CASE("sweep errors") {
  auto cfg = config("x*y", Invariant::Depth, 3);
  cfg.n_min = 4;
  CHECK_THROWS_AS(run_sweep(cfg), DomainError);
  cfg = config("x*y", Invariant::Depth, 3);
  cfg.jobs = 0;
  CHECK_THROWS_AS(run_sweep(cfg), DomainError);
  CHECK_THROWS_AS(parse_invariant("volume"), ParseError);
  cfg = config("a*b*c*d*e", Invariant::Sdepth, 2);
  try {
    run_sweep(cfg);
    FAIL("expected a limit error");
  } catch (const LimitExceeded& e) {
    CHECK(std::string(e.what()).rfind("n = 1: ", 0) == 0);
  }
}

TEST_CASE("property: byte determinism across jobs and the JSON round trip") {
  for (auto inv : {Invariant::Depth, Invariant::Reg, Invariant::Ass, Invariant::Gens}) {
    for (const auto& a : testutil::corpus(10, 53)) {
      if (!a.is_proper_nonzero()) continue;
      SweepConfig cfg;
      cfg.ideal = a;
      cfg.invariant = inv;
      cfg.n_max = 6;
      const auto r1 = run_sweep(cfg);
      cfg.jobs = 3;
      const auto r3 = run_sweep(cfg);
      CHECK(emit_csv(r1) == emit_csv(r3));
      CHECK(emit_json(r1) == emit_json(r3));
      CHECK(parse_records_json(emit_json(r1)) == r1);
    }
  }
}

TEST_CASE("property: records at multiples of e match the closure of ordinary powers") {
  for (const auto& a : testutil::corpus(12, 59)) {
    RationalPowers P(a);
    const std::int64_t e = P.e();
    if (e > 6) continue;
    for (auto inv : {Invariant::Depth, Invariant::Reg, Invariant::Ass, Invariant::Gens}) {
      SweepConfig cfg;
      cfg.ideal = a;
      cfg.invariant = inv;
      cfg.n_min = e;
      cfg.n_step = e;
      cfg.n_max = 3 * e;
      const auto recs = per_n(run_sweep(cfg), invariant_name(inv));
      for (std::size_t t = 0; t < recs.size(); ++t) {
        const int n = static_cast<int>(t + 1);
        const auto c = integral_closure(power(a, n));
        std::string want;
        switch (inv) {
          case Invariant::Depth: want = std::to_string(local_cohomology_table(c).depth); break;
          case Invariant::Reg: want = std::to_string(betti_table(c).ideal_regularity()); break;
          case Invariant::Ass: {
            for (const auto& p : associated_primes(c)) want += (want.empty() ? "" : " ") + prime_str(p, c.var_names());
            break;
          }
          default: {
            for (const auto& g : c.gens()) want += (want.empty() ? "" : " ") + c.monomial_str(g);
          }
        }
        CAPTURE(a.str());
        CHECK(recs[t].value == want);
      }
    }
  }
}
