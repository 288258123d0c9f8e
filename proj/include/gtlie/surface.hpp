#pragma once

// One-vertex ribbon graphs (roses with a cyclic order of half-edges).
//
// Generator x contributes two half-edges at the vertex: the outgoing end,
// labeled by the plain letter x, and the incoming end, labeled X. The
// cyclic order lists all 2n half-edges counterclockwise; counterclockwise is
// the positive orientation of the thickened surface.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gtlie/cyclic_word.hpp"
#include "gtlie/errors.hpp"

namespace gtlie {

// nullopt when `order` is a permutation of the 2 * rank half-edge labels,
// otherwise a description of the defect.
inline std::optional<std::string> validate(int rank, const std::vector<Letter>& order) {
  if (rank < 1) return "rank must be at least 1";
  if (order.size() != static_cast<std::size_t>(2 * rank)) {
    return "ribbon order has " + std::to_string(order.size()) +
           " half-edges, expected " + std::to_string(2 * rank);
  }
  std::vector<bool> seen(static_cast<std::size_t>(2 * rank), false);
  for (Letter x : order) {
    if (x.generator() >= rank) return "half-edge " + to_string(x) + " is outside rank " + std::to_string(rank);
    if (seen[static_cast<std::size_t>(x.code())]) return "duplicate half-edge " + to_string(x);
    seen[static_cast<std::size_t>(x.code())] = true;
  }
  return std::nullopt;
}

class RibbonGraph {
 public:
  // Throws InputError if `order` is not a permutation of the half-edges.
  RibbonGraph(int rank, std::vector<Letter> order) : rank_(rank), order_(std::move(order)) {
    if (auto err = validate(rank_, order_)) throw InputError(*err);
    position_.assign(order_.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      position_[static_cast<std::size_t>(order_[i].code())] = static_cast<int>(i);
    }
  }

  int rank() const { return rank_; }
  int degree() const { return 2 * rank_; }
  const std::vector<Letter>& cyclic_order() const { return order_; }
  int position(Letter x) const { return position_[static_cast<std::size_t>(x.code())]; }
  Letter successor(Letter x) const {
    return order_[static_cast<std::size_t>((position(x) + 1) % degree())];
  }

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.rank_ == b.rank_ && a.order_ == b.order_;
  }

 private:
  int rank_;
  std::vector<Letter> order_;
  std::vector<int> position_;
};

// S^2 minus k points: order (x1, X1, x2, X2, ...).
inline RibbonGraph planar_rose(int punctures) {
  if (punctures < 2) throw InputError("a punctured sphere needs at least 2 punctures");
  const int rank = punctures - 1;
  std::vector<Letter> order;
  for (int g = 0; g < rank; ++g) {
    order.emplace_back(g, false);
    order.emplace_back(g, true);
  }
  return {rank, std::move(order)};
}

// Once-punctured torus: order (a, b, A, B).
inline RibbonGraph torus_rose() {
  return {2, {Letter(0, false), Letter(1, false), Letter(0, true), Letter(1, true)}};
}

// Comma-separated half-edge tokens, e.g. "a,A,b,B" or "g0,G0,g1,G1".
inline RibbonGraph parse_ribbon(std::string_view text) {
  std::vector<Letter> order;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(start, end - start);
    if (tok.empty()) throw InputError("empty token in ribbon order '" + std::string(text) + "'");
    const bool alpha = tok.size() == 1 && tok[0] != 'g' && tok[0] != 'G';
    Word w = alpha ? parse_word(tok, 26) : parse_word(tok, 1 << 14);
    if (w.size() != 1) throw InputError("ribbon token '" + std::string(tok) + "' is not a single half-edge");
    order.push_back(w.front());
    start = end + 1;
  }
  if (order.size() % 2 != 0) throw InputError("ribbon order must list an even number of half-edges");
  return {static_cast<int>(order.size() / 2), std::move(order)};
}

inline std::string to_string(const RibbonGraph& r) {
  std::string s;
  for (std::size_t i = 0; i < r.cyclic_order().size(); ++i) {
    if (i) s += ',';
    s += to_string(r.cyclic_order()[i], r.rank());
  }
  return s;
}

// Boundary words. From half-edge h: traverse its edge (emit h), arrive along
// h^-1, continue with the cyclic successor of h^-1.
inline std::vector<Word> face_trace(const RibbonGraph& r) {
  std::vector<Word> faces;
  std::vector<bool> used(static_cast<std::size_t>(r.degree()), false);
  for (Letter start : r.cyclic_order()) {
    if (used[static_cast<std::size_t>(start.code())]) continue;
    Word face;
    Letter h = start;
    do {
      used[static_cast<std::size_t>(h.code())] = true;
      face.push_back(h);
      h = r.successor(h.inverse());
    } while (h != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

struct SurfaceStats {
  int euler_char = 0;
  int boundaries = 0;
  int genus = 0;
};

inline SurfaceStats surface_stats(const RibbonGraph& r) {
  const int faces = static_cast<int>(face_trace(r).size());
  const int twice_genus = r.rank() + 1 - faces;
  detail::ensure(twice_genus >= 0 && twice_genus % 2 == 0,
                 "odd genus parity for ribbon order " + to_string(r));
  return {1 - r.rank(), faces, twice_genus / 2};
}

}  // namespace gtlie
