#include "ratpow/corpus.hpp"

#include <algorithm>
#include <random>

namespace ratpow {

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, int count, const CorpusShape& shape) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<MonomialIdeal> out;
  const int top = shape.squarefree ? 1 : shape.max_exp;
  while (static_cast<int>(out.size()) < count) {
    const auto d = static_cast<std::size_t>(pick(static_cast<int>(shape.min_dim), static_cast<int>(shape.max_dim)));
    const int r = pick(1, shape.max_gens);
    std::vector<Exponent> gens;
    for (int i = 0; i < r; ++i) {
      Exponent g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = pick(0, top);
      if (g.degree() == 0) g[pick(0, static_cast<int>(d) - 1)] = 1;
      gens.push_back(std::move(g));
    }
    out.push_back(MonomialIdeal::from_generators(d, std::move(gens)));
  }
  return out;
}

std::vector<HyperplaneFamily> random_families(std::uint64_t seed, int count, const FamilyShape& shape) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<HyperplaneFamily> out;
  while (static_cast<int>(out.size()) < count) {
    const auto d = static_cast<std::size_t>(pick(static_cast<int>(shape.min_dim), static_cast<int>(shape.max_dim)));
    HyperplaneFamily f;
    f.vars = default_var_names(d);
    const int r = pick(1, shape.max_halfspaces);
    for (int i = 0; i < r; ++i) {
      IntegralHalfspace h;
      h.normal.assign(d, 0);
      for (auto& a : h.normal) a = pick(0, shape.max_entry);
      if (std::all_of(h.normal.begin(), h.normal.end(), [](std::int64_t a) { return a == 0; })) {
        h.normal[pick(0, static_cast<int>(d) - 1)] = pick(1, shape.max_entry);
      }
      h.threshold = pick(1, shape.max_entry);
      f.halfspaces.push_back(std::move(h));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ratpow
