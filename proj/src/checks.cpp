#include "ratpow/checks.hpp"

#include <functional>
#include <random>

#include "ratpow/corpus.hpp"
#include "ratpow/filtration.hpp"
#include "ratpow/homology.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/rational_power.hpp"
#include "ratpow/stanley.hpp"
#include "ratpow/sweep.hpp"

namespace ratpow {

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = detail();
    }
  }
  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

/// Every exponent in [0, hi]^d.
void for_box(std::size_t d, int hi, const std::function<void(const Exponent&)>& fn) {
  Exponent a(d);
  while (true) {
    fn(a);
    std::size_t j = 0;
    for (; j < d; ++j) {
      if (++a[j] <= hi) break;
      a[j] = 0;
    }
    if (j == d) return;
  }
}

bool antichain(const MonomialIdeal& I) {
  for (const auto& a : I.gens()) {
    for (const auto& b : I.gens()) {
      if (!(a == b) && a.divides(b)) return false;
    }
  }
  return true;
}

MonomialIdeal padded(const MonomialIdeal& I, std::size_t d) {
  std::vector<Exponent> gens;
  for (const auto& g : I.gens()) {
    Exponent p(d);
    for (std::size_t j = 0; j < g.size(); ++j) p[j] = g[j];
    gens.push_back(std::move(p));
  }
  return MonomialIdeal::from_generators(d, std::move(gens));
}

CheckResult ideal_laws(const std::vector<MonomialIdeal>& corpus) {
  Check c("ideal-core laws");
  for (std::size_t t = 0; t + 2 < corpus.size(); t += 3) {
    const std::size_t d = std::max({corpus[t].dim(), corpus[t + 1].dim(), corpus[t + 2].dim()});
    const auto a = padded(corpus[t], d), b = padded(corpus[t + 1], d), e = padded(corpus[t + 2], d);
    auto what = [&] { return a.str() + " | " + b.str() + " | " + e.str(); };
    c.expect(product(a, b) == product(b, a), what);
    c.expect(intersect(a, b) == intersect(b, a), what);
    c.expect(product(product(a, b), e) == product(a, product(b, e)), what);
    c.expect(intersect(intersect(a, b), e) == intersect(a, intersect(b, e)), what);
    c.expect(antichain(product(a, b)) && antichain(intersect(a, b)), what);
  }
  for (const auto& I : corpus) {
    for_box(I.dim(), 5, [&](const Exponent& m) {
      bool brute = false;
      for (const auto& g : I.gens()) brute = brute || g.divides(m);
      c.expect(brute == I.contains(m), [&] { return I.str() + " at " + I.monomial_str(m); });
    });
  }
  return c.result();
}

CheckResult ass_min(const std::vector<MonomialIdeal>& squarefree) {
  Check c("Ass = Min for squarefree ideals");
  for (const auto& I : squarefree) {
    c.expect(associated_primes(I) == minimal_primes(I), [&] { return I.str(); });
  }
  return c.result();
}

CheckResult facets(const std::vector<MonomialIdeal>& corpus) {
  Check c("Newton polyhedron facet certification");
  for (const auto& I : corpus) {
    const auto np = newton_polyhedron(I);
    for (const auto& f : np.facets) {
      bool tight = false;
      for (const auto& g : I.gens()) {
        c.expect(f.eval(g) >= f.threshold, [&] { return I.str(); });
        tight = tight || f.eval(g) == f.threshold;
      }
      c.expect(tight, [&] { return I.str() + ": a facet is not tight at any generator"; });
    }
    const int l = analytic_spread(np);
    c.expect(l >= 1 && l <= static_cast<int>(I.dim()), [&] { return I.str(); });
  }
  return c.result();
}

CheckResult rational_powers(const std::vector<MonomialIdeal>& corpus) {
  Check c("rational power properties");
  for (const auto& I : corpus) {
    RationalPowers P(I);
    const std::int64_t e = P.e();
    for (std::int64_t a = 1; a <= 6; ++a) {
      for (std::int64_t b = 1; b <= 4; ++b) {
        const RationalIndex idx(a, b);
        const auto Ia = P.power(idx);
        auto what = [&] { return I.str() + " at " + idx.str(); };
        for (std::int64_t k = 2; k <= 3; ++k) c.expect(Ia == P.power(RationalIndex(k * a, k * b)), what);
        c.expect(Ia == P.step(P.canonical_step(idx)), what);
        c.expect(integral_closure(Ia) == Ia, what);
        const RationalIndex next(a * 2 + 1, b * 2);  // a/b + 1/(2b)
        c.expect(is_subset(P.power(next), Ia), what);
        const auto sum = RationalIndex(Rational(a, b) + Rational(1, 2));
        c.expect(is_subset(product(Ia, P.power(RationalIndex(1, 2))), P.power(sum)), what);
      }
    }
    for (int n = 1; n <= 3; ++n) {
      c.expect(P.step(n * e) == integral_closure(power(I, n)), [&] { return I.str() + " n=" + std::to_string(n); });
    }
  }
  return c.result();
}

CheckResult families(std::uint64_t seed, int count) {
  Check c("hyperplane family engine");
  for (const auto& F : random_families(seed, count)) {
    const FamilyResult R = family_to_ideal(F);
    auto what = [&] { return to_json(F); };
    c.expect(checked_mul(R.f, R.g) % R.e == 0, what);
    RationalPowers P(R.ideal);
    bool all_one = true;
    for (auto m : R.reduction_factors) {
      c.expect(R.g % m == 0, what);
      all_one = all_one && m == 1;
    }
    if (all_one) c.expect(R.e == R.f * R.g, what);
    for (std::int64_t p = 1; p <= 10; ++p) {
      const Rational sigma(p, 3);
      const auto Is = family_index(F, sigma);
      c.expect(Is == P.power(RationalIndex(sigma / Rational(R.g))), what);
      c.expect(Is == family_index(F, Rational((sigma * Rational(R.f)).ceil(), R.f)), what);
    }
    for (std::int64_t n = 1; n <= 12; ++n) {
      c.expect(P.step(n) == family_index(F, Rational(R.g * n, R.e)), what);
    }
  }
  return c.result();
}

CheckResult symbolic(const std::vector<MonomialIdeal>& squarefree) {
  Check c("symbolic powers as rational powers");
  for (const auto& I : squarefree) {
    const auto sg = symbolic_generator_ideal(I, 0);
    RationalPowers P(sg.ideal);
    for (int n = 1; n <= 6; ++n) {
      c.expect(symbolic_power(I, n) == P.power(RationalIndex(n, sg.g)),
               [&] { return I.str() + " n=" + std::to_string(n); });
    }
  }
  return c.result();
}

CheckResult splitting(const std::vector<MonomialIdeal>& corpus) {
  Check c("splitting of rational-power filtrations");
  for (const auto& I : corpus) {
    RationalPowers P(I);
    for (std::int64_t m : {2, 3, 5}) {
      SplittingOptions opt;
      opt.n_max = 4;
      const auto r = check_splitting(P, m, opt);
      c.expect(r.passed, [&] { return I.str() + " m=" + std::to_string(m); });
    }
  }
  return c.result();
}

CheckResult oracle(const std::vector<MonomialIdeal>& corpus) {
  Check c("Takayama vs Betti depth and regularity");
  for (const auto& I : corpus) {
    const auto lc = local_cohomology_table(I);
    const auto bt = betti_table(I);
    c.expect(lc.depth == bt.depth && lc.regularity == bt.regularity, [&] {
      return I.str() + ": depth " + std::to_string(lc.depth) + "/" + std::to_string(bt.depth) + " reg " +
             std::to_string(lc.regularity) + "/" + std::to_string(bt.regularity);
    });
  }
  return c.result();
}

CheckResult euler(std::uint64_t seed) {
  Check c("reduced Euler characteristic");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    const std::uint32_t ground = (1u << n) - 1;
    std::vector<std::uint32_t> facets;
    const int r = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < r; ++i) facets.push_back(std::uniform_int_distribution<std::uint32_t>(0, ground)(rng));
    const auto k = SimplicialComplex::from_facets(ground, facets);
    const auto betti = reduced_betti_numbers(k);
    int chi = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * betti[i];
    c.expect(chi == reduced_euler_characteristic(k), [&] { return "random complex " + std::to_string(t); });
  }
  return c.result();
}

CheckResult projection(const std::vector<MonomialIdeal>& corpus) {
  Check c("face projection commutes with rational powers");
  for (const auto& I : corpus) {
    RationalPowers P(I);
    for (std::uint32_t F = 1; F + 1 < (1u << I.dim()); ++F) {
      const auto IF = I.projected(F);
      for (std::int64_t n = 1; n <= 6; ++n) {
        const RationalIndex idx(n, P.e());
        const auto lhs = P.power(idx).projected(F);
        c.expect(IF.is_unit() ? lhs.is_unit() : lhs == rational_power(IF, idx),
                 [&] { return I.str() + " at " + idx.str(); });
      }
    }
  }
  return c.result();
}

CheckResult equivalences(const std::vector<MonomialIdeal>& corpus) {
  Check c("membership equivalences (a) and (b)");
  for (const auto& I : corpus) {
    RationalPowers P(I);
    for_box(I.dim(), 4, [&](const Exponent& f) {
      for (std::int64_t m = 1; m <= 6; ++m) {
        for (std::int64_t k = 1; k <= m; ++k) {
          for (std::int64_t j = m - k; j <= m; ++j) {
            const auto r = power_equivalences(P, f, {m, k, j, std::min<std::int64_t>(m, 4)});
            c.expect(r.passed(), [&] { return I.str() + " f=" + I.monomial_str(f); });
          }
        }
      }
    });
  }
  return c.result();
}

CheckResult determinism() {
  Check c("sweep byte determinism");
  SweepConfig cfg;
  cfg.ideal = parse_ideal("x*y, y*z, z*x");
  cfg.n_max = 8;
  const auto one = emit_csv(run_sweep(cfg));
  cfg.jobs = 4;
  const auto four = emit_csv(run_sweep(cfg));
  c.expect(one == four, [] { return std::string("--jobs 1 and --jobs 4 differ"); });
  const auto recs = run_sweep(cfg);
  c.expect(parse_records_json(emit_json(recs)) == recs, [] { return std::string("JSON round trip"); });
  return c.result();
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options) {
  const auto corpus = random_corpus(options.seed, options.corpus_size);
  CorpusShape sf;
  sf.squarefree = true;
  sf.min_dim = 2;
  const auto squarefree = random_corpus(options.seed + 1, options.corpus_size / 2, sf);
  std::vector<CheckResult> out;
  out.push_back(ideal_laws(corpus));
  out.push_back(ass_min(squarefree));
  out.push_back(facets(corpus));
  out.push_back(rational_powers(corpus));
  out.push_back(families(options.seed + 2, options.corpus_size / 2));
  out.push_back(symbolic(squarefree));
  out.push_back(splitting(corpus));
  out.push_back(oracle(corpus));
  out.push_back(euler(options.seed + 3));
  out.push_back(projection(corpus));
  out.push_back(equivalences(corpus));
  out.push_back(determinism());
  return out;
}

}  // namespace ratpow
