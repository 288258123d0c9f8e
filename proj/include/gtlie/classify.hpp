#pragma once

// Simplicity, powers of simple classes, and the cobracket characterization:
// on a genus-zero surface a class has zero cobracket iff it is a positive
// power of a simple class.

#include <cstdint>
#include <optional>

#include "gtlie/bialgebra.hpp"
#include "gtlie/cyclic_word.hpp"
#include "gtlie/linking.hpp"
#include "gtlie/surface.hpp"

namespace gtlie {

inline bool is_simple(const RibbonGraph& r, const CyclicWord& w) {
  const auto [root, m] = primitive_root(w);
  return m == 1 && !has_crossing(r, root);
}

// (root, m) when w = root^m with root simple; m = 1 qualifies.
inline std::optional<PrimitiveRoot> power_of_simple(const RibbonGraph& r, const CyclicWord& w) {
  PrimitiveRoot pr = primitive_root(w);
  if (!is_simple(r, pr.root)) return std::nullopt;
  return pr;
}

struct TheoremStatus {
  CyclicWord word;
  bool cobracket_zero = false;
  bool power_of_simple = false;
  bool consistent = false;

  // Power of a simple class with nonzero cobracket: must never happen.
  bool converse_violation() const { return power_of_simple && !cobracket_zero; }
};

inline TheoremStatus turaev_status(const RibbonGraph& r, const CyclicWord& w) {
  TheoremStatus st;
  st.word = canonical(w);
  st.cobracket_zero = cobracket(r, st.word).empty();
  st.power_of_simple = power_of_simple(r, st.word).has_value();
  st.consistent = st.cobracket_zero == st.power_of_simple;
  return st;
}

}  // namespace gtlie
