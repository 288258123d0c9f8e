#pragma once

#include <random>
#include <string>
#include <vector>

#include "gtlie/gtlie.hpp"

namespace gtlie::testing {

inline CyclicWord cw(const std::string& s, int rank = 2) {
  return CyclicWord(parse_word(s, rank));
}

inline CyclicWord cls(const std::string& s, int rank = 2) { return parse_class(s, rank); }

inline std::vector<CyclicWord> all_classes(int rank, int max_len) {
  std::vector<CyclicWord> out;
  for (int len = 1; len <= max_len; ++len) {
    auto batch = enumerate_canonical(rank, len);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// Uniform random freely reduced word of the given length.
inline Word random_reduced(std::mt19937_64& rng, int rank, int len) {
  Word w;
  while (static_cast<int>(w.size()) < len) {
    const Letter x = Letter::from_code(static_cast<int>(rng() % (2 * rank)));
    if (!w.empty() && w.back() == x.inverse()) continue;
    w.push_back(x);
  }
  return w;
}

inline std::vector<RibbonGraph> rank2_orders() { return {planar_rose(3), torus_rose()}; }

}  // namespace gtlie::testing
