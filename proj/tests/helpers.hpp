#pragma once

#include <string>
#include <vector>

#include "ratpow/corpus.hpp"
#include "ratpow/ideal.hpp"

namespace testutil {

inline ratpow::MonomialIdeal I(const std::string& text) { return ratpow::parse_ideal(text); }

inline ratpow::MonomialIdeal over(const std::vector<std::string>& vars, const std::string& text) {
  return ratpow::parse_ideal(text, vars);
}

inline std::vector<ratpow::Exponent> E(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<ratpow::Exponent> out;
  for (auto r : rows) out.emplace_back(r);
  return out;
}

/// The corpus of the acceptance criteria: d <= 3, <= 4 generators, exponents <= 4.
inline std::vector<ratpow::MonomialIdeal> corpus(int count = 200, std::uint64_t seed = 7) {
  return ratpow::random_corpus(seed, count);
}

inline std::vector<ratpow::MonomialIdeal> squarefree_corpus(int count = 40, std::uint64_t seed = 11) {
  ratpow::CorpusShape s;
  s.squarefree = true;
  s.min_dim = 2;
  return ratpow::random_corpus(seed, count, s);
}

}  // namespace testutil
