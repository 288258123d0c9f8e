#pragma once

// Crossings of taut curves, decided by the circular order of ends of the
// universal-cover tree.
//
// A corner i of a cyclic word w is one passage of the loop through the
// vertex, between letters w[i-1] and w[i]. Lifting that passage to the tree
// gives an axis through the base vertex with two ends: the forward ray
// w[i], w[i+1], ... and the backward ray w[i-1]^-1, w[i-2]^-1, ... The
// ribbon structure orders the ends of the tree circularly; two axes cross
// iff their end pairs interleave.
//
// Two axes may share a segment of edges. The same pair of axes is then seen
// from every vertex of that segment, so a crossing is counted only at the
// vertex where the segment begins (see count_here()).

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gtlie/cyclic_word.hpp"
#include "gtlie/errors.hpp"
#include "gtlie/surface.hpp"

namespace gtlie {

enum class Direction { forward, backward };

struct End {
  const CyclicWord* word = nullptr;
  std::ptrdiff_t index = 0;
  Direction direction = Direction::forward;

  Letter letter(std::ptrdiff_t t) const {
    return direction == Direction::forward ? word->at(index + t)
                                           : word->at(index - 1 - t).inverse();
  }
  std::size_t period() const { return word->size(); }
};

struct Corner {
  const CyclicWord* word = nullptr;
  std::ptrdiff_t index = 0;

  End forward() const { return {word, index, Direction::forward}; }
  End backward() const { return {word, index, Direction::backward}; }
};

struct LinkedPair {
  std::size_t i = 0;
  std::size_t j = 0;
  int sign = 0;

  friend auto operator<=>(const LinkedPair&, const LinkedPair&) = default;
};

namespace detail {

inline int slot_at(const RibbonGraph& r, const End& e, std::ptrdiff_t t) {
  if (t == 0) return r.position(e.letter(0));
  const int base = r.position(e.letter(t - 1).inverse()) + 1;
  const int d = r.degree();
  return ((r.position(e.letter(t)) - base) % d + d) % d;
}

}  // namespace detail

// slot_0 is the position of the first letter counted from the first entry of
// the cyclic order; slot_t is the counterclockwise distance from the
// successor of the arrival half-edge to the outgoing letter.
inline std::vector<int> slot_sequence(const RibbonGraph& r, const End& e, std::size_t t_max) {
  detail::require(t_max >= 1, "slot_sequence needs t_max >= 1");
  std::vector<int> out(t_max);
  for (std::size_t t = 0; t < t_max; ++t) {
    out[t] = detail::slot_at(r, e, static_cast<std::ptrdiff_t>(t));
  }
  return out;
}

// Lexicographic on slot sequences; n1 + n2 terms decide equality of the
// periodic rays.
inline std::strong_ordering compare_ends(const RibbonGraph& r, const End& a, const End& b) {
  const auto horizon = static_cast<std::ptrdiff_t>(a.period() + b.period());
  for (std::ptrdiff_t t = 0; t < horizon; ++t) {
    const int x = detail::slot_at(r, a, t);
    const int y = detail::slot_at(r, b, t);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

namespace detail {

// Ranks of (B1, F1, B2, F2) in the linear order of ends.
inline std::array<int, 4> end_ranks(const RibbonGraph& r, const Corner& c1, const Corner& c2) {
  const std::array<End, 4> ends{c1.backward(), c1.forward(), c2.backward(), c2.forward()};
  std::array<int, 4> rank{0, 0, 0, 0};
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      const auto cmp = compare_ends(r, ends[static_cast<std::size_t>(p)],
                                    ends[static_cast<std::size_t>(q)]);
      ensure(cmp != 0, "equal ends between corners " + std::to_string(c1.index) + " of " +
                           to_string(*c1.word) + " and " + std::to_string(c2.index) + " of " +
                           to_string(*c2.word));
      ++rank[static_cast<std::size_t>(cmp < 0 ? q : p)];
    }
  }
  return rank;
}

inline bool interleaved(const std::array<int, 4>& rk) {
  const int lo = std::min(rk[0], rk[1]);
  const int hi = std::max(rk[0], rk[1]);
  const bool b2 = lo < rk[2] && rk[2] < hi;
  const bool f2 = lo < rk[3] && rk[3] < hi;
  return b2 != f2;
}

// Counterclockwise from F1: +1 iff F2 comes before B1.
inline int sign_of(const std::array<int, 4>& rk) {
  const auto from_f1 = [&](int x) { return (x - rk[1] + 4) % 4; };
  return from_f1(rk[3]) < from_f1(rk[0]) ? 1 : -1;
}

// The pair of axes is counted at this vertex iff their shared segment does
// not continue along the backward ray of c1.
inline bool count_here(const Corner& c1, const Corner& c2) {
  const Letter back = c1.backward().letter(0);
  return back != c2.backward().letter(0) && back != c2.forward().letter(0);
}

// Slot tables of one word, so that every slot of every ray through one of its
// corners is a table lookup. Used on the hot paths (linked pairs, sweeps);
// slot_at() above is the direct definition.
class WordEnds {
 public:
  WordEnds(const RibbonGraph& r, const CyclicWord& w) : word_(&w) {
    const std::size_t n = w.size();
    const int d = r.degree();
    auto wrap = [d](int x) { return ((x % d) + d) % d; };
    first_fwd_.resize(n);
    first_bwd_.resize(n);
    turn_fwd_.resize(n);
    turn_bwd_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Letter x = w[k];
      const Letter prev = w[(k + n - 1) % n];
      const Letter next = w[(k + 1) % n];
      first_fwd_[k] = r.position(x);
      first_bwd_[k] = r.position(x.inverse());
      // Forward: into w[k] after arriving along w[k-1]^-1.
      turn_fwd_[k] = wrap(r.position(x) - r.position(prev.inverse()) - 1);
      // Backward: into w[k]^-1 after arriving along w[k+1].
      turn_bwd_[k] = wrap(r.position(x.inverse()) - r.position(next) - 1);
    }
  }

  const CyclicWord& word() const { return *word_; }
  std::size_t size() const { return word_->size(); }

  // Cursor over the slot sequence of one ray.
  struct Ray {
    const WordEnds* ends;
    std::size_t k;  // index of the letter behind the next slot
    bool forward;
    bool started = false;

    int next() {
      const std::size_t n = ends->size();
      int slot = 0;
      if (!started) {
        started = true;
        slot = forward ? ends->first_fwd_[k] : ends->first_bwd_[k];
      } else {
        slot = forward ? ends->turn_fwd_[k] : ends->turn_bwd_[k];
      }
      if (forward) {
        k = k + 1 == n ? 0 : k + 1;
      } else {
        k = k == 0 ? n - 1 : k - 1;
      }
      return slot;
    }
  };

  Ray forward(std::size_t corner) const { return {this, corner, true}; }
  Ray backward(std::size_t corner) const {
    return {this, corner == 0 ? size() - 1 : corner - 1, false};
  }

  Letter forward_letter(std::size_t corner) const { return (*word_)[corner]; }
  Letter backward_letter(std::size_t corner) const {
    return (*word_)[corner == 0 ? size() - 1 : corner - 1].inverse();
  }

 private:
  const CyclicWord* word_;
  std::vector<int> first_fwd_, first_bwd_, turn_fwd_, turn_bwd_;
};

inline std::strong_ordering compare_rays(WordEnds::Ray a, WordEnds::Ray b) {
  const std::size_t horizon = a.ends->size() + b.ends->size();
  for (std::size_t t = 0; t < horizon; ++t) {
    const int x = a.next();
    const int y = b.next();
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

// Signed crossing of the ordered pair (corner a of u, corner b of w), or
// nullopt if the axes do not cross or the crossing is attributed to another
// vertex.
inline std::optional<int> ordered_crossing(const WordEnds& u, std::size_t a, const WordEnds& w,
                                           std::size_t b) {
  const Letter back = u.backward_letter(a);
  if (back == w.backward_letter(b) || back == w.forward_letter(b)) return std::nullopt;
  const std::array<WordEnds::Ray, 4> rays{u.backward(a), u.forward(a), w.backward(b), w.forward(b)};
  std::array<int, 4> rank{0, 0, 0, 0};
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      const auto cmp = compare_rays(rays[static_cast<std::size_t>(p)], rays[static_cast<std::size_t>(q)]);
      ensure(cmp != 0, "equal ends between corners " + std::to_string(a) + " of " +
                           to_string(u.word()) + " and " + std::to_string(b) + " of " +
                           to_string(w.word()));
      ++rank[static_cast<std::size_t>(cmp < 0 ? q : p)];
    }
  }
  if (!interleaved(rank)) return std::nullopt;
  return sign_of(rank);
}

}  // namespace detail

// Raw end interleaving seen from the base vertex. Equal ends are an
// invariant violation.
inline bool interleaved(const RibbonGraph& r, const Corner& c1, const Corner& c2) {
  return detail::interleaved(detail::end_ranks(r, c1, c2));
}

inline int crossing_sign(const RibbonGraph& r, const Corner& c1, const Corner& c2) {
  const auto rk = detail::end_ranks(r, c1, c2);
  detail::require(detail::interleaved(rk), "crossing_sign on non-interleaved corners");
  return detail::sign_of(rk);
}

inline bool is_primitive(const CyclicWord& w) { return primitive_root(w).exponent == 1; }

// Every crossing of a primitive class, once, as (i < j, sign(i, j)).
inline std::vector<LinkedPair> linked_pairs(const RibbonGraph& r, const CyclicWord& w) {
  detail::require(!w.empty() && is_primitive(w), "linked_pairs needs a primitive word");
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  const detail::WordEnds ends(r, w);
  std::vector<LinkedPair> out;
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    for (std::ptrdiff_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Corner ca{&w, a};
      const Corner cb{&w, b};
      const auto s = detail::ordered_crossing(ends, static_cast<std::size_t>(a), ends,
                                              static_cast<std::size_t>(b));
      if (!s) continue;
      // Each crossing has two ordered representatives. Along a parallel
      // segment they sit at the same vertex; along an antiparallel segment x
      // they sit at opposite ends, and we keep the one reading x < x^-1.
      bool keep = a < b;
      if (ca.forward().letter(0) == cb.backward().letter(0)) {
        std::ptrdiff_t k = 0;
        while (ca.forward().letter(k) == cb.backward().letter(k)) {
          ++k;
          detail::ensure(k <= 2 * n, "unbounded shared segment in " + to_string(w));
        }
        keep = false;
        for (std::ptrdiff_t t = 0; t < k; ++t) {
          const Letter x = ca.forward().letter(t);
          const Letter y = ca.forward().letter(k - 1 - t).inverse();
          if (x != y) {
            keep = x < y;
            break;
          }
        }
      }
      if (!keep) continue;
      if (a < b) {
        out.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), *s});
      } else {
        out.push_back({static_cast<std::size_t>(b), static_cast<std::size_t>(a), -*s});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Crossings of a primitive class with a pushed-off copy of itself: every
// ordered pair (i, j), i != j, each self-crossing contributing twice.
inline std::vector<LinkedPair> ordered_linked_pairs(const RibbonGraph& r, const CyclicWord& w) {
  detail::require(!w.empty() && is_primitive(w), "ordered_linked_pairs needs a primitive word");
  const detail::WordEnds ends(r, w);
  std::vector<LinkedPair> out;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = 0; b < w.size(); ++b) {
      if (a == b) continue;
      if (auto s = detail::ordered_crossing(ends, a, ends, b)) out.push_back({a, b, *s});
    }
  }
  return out;
}

// Crossings between two primitive classes: (corner of u, corner of w, sign).
inline std::vector<LinkedPair> linked_pairs_between(const RibbonGraph& r, const CyclicWord& u,
                                                    const CyclicWord& w) {
  detail::require(!u.empty() && !w.empty() && is_primitive(u) && is_primitive(w),
                  "linked_pairs_between needs primitive words");
  detail::require(canonical(u) != canonical(w), "linked_pairs_between needs distinct classes");
  const detail::WordEnds ue(r, u), we(r, w);
  std::vector<LinkedPair> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (auto s = detail::ordered_crossing(ue, i, we, j)) out.push_back({i, j, *s});
    }
  }
  return out;
}

// True iff the primitive class w has a self-crossing; stops at the first one.
inline bool has_crossing(const RibbonGraph& r, const CyclicWord& w) {
  detail::require(!w.empty() && is_primitive(w), "has_crossing needs a primitive word");
  const detail::WordEnds ends(r, w);
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (detail::ordered_crossing(ends, a, ends, b) || detail::ordered_crossing(ends, b, ends, a)) {
        return true;
      }
    }
  }
  return false;
}

// Minimal self-intersection: m^2 * |linked_pairs(root)| + (m - 1) for
// w = root^m.
inline std::int64_t self_intersection(const RibbonGraph& r, const CyclicWord& w) {
  detail::require(!w.empty(), "self_intersection of the trivial class");
  const auto [root, m] = primitive_root(w);
  const auto base = static_cast<std::int64_t>(linked_pairs(r, root).size());
  return static_cast<std::int64_t>(m) * m * base + (m - 1);
}

}  // namespace gtlie
