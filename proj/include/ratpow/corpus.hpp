#pragma once

#include <cstdint>
#include <vector>

#include "ratpow/filtration.hpp"
#include "ratpow/ideal.hpp"

namespace ratpow {

struct CorpusShape {
  std::size_t min_dim = 1;
  std::size_t max_dim = 3;
  int max_gens = 4;
  int max_exp = 4;
  bool squarefree = false;
};

/// Deterministic random proper nonzero ideals (mt19937_64 seeded by `seed`).
std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, int count, const CorpusShape& shape = {});

struct FamilyShape {
  std::size_t min_dim = 1;
  std::size_t max_dim = 3;
  int max_halfspaces = 4;
  int max_entry = 5;
};

std::vector<HyperplaneFamily> random_families(std::uint64_t seed, int count, const FamilyShape& shape = {});

}  // namespace ratpow
