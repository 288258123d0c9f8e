#pragma once

// Letters, words and cyclic words over a free group of finite rank.
//
// A free homotopy class of loops on a surface with free fundamental group is
// a conjugacy class, i.e. a cyclically reduced word read cyclically. The
// canonical representative is the lexicographically least rotation under the
// letter order (x0 < X0 < x1 < X1 < ...). A class and its inverse are
// distinct classes.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtlie/errors.hpp"

namespace gtlie {

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, bool inverted)
      : code_(static_cast<std::uint16_t>(2 * generator + (inverted ? 1 : 0))) {}

  static constexpr Letter from_code(int code) {
    Letter x;
    x.code_ = static_cast<std::uint16_t>(code);
    return x;
  }

  constexpr int generator() const { return code_ >> 1; }
  constexpr bool inverted() const { return (code_ & 1U) != 0; }
  // Dense index in [0, 2 * rank); its natural order is the letter order.
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1U); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint16_t code_ = 0;
};

using Word = std::vector<Letter>;

// Cyclically reduced, nonempty. Any rotation may be stored; use canonical()
// to obtain the class representative.
class CyclicWord {
 public:
  CyclicWord() = default;

  // Throws ContractViolation unless `letters` is nonempty and cyclically
  // reduced.
  explicit CyclicWord(Word letters) : letters_(std::move(letters)) {
    detail::require(!letters_.empty(), "cyclic word must be nonempty");
    const std::size_t n = letters_.size();
    for (std::size_t i = 0; i < n; ++i) {
      detail::require(letters_[(i + 1) % n] != letters_[i].inverse() || n == 1,
                      "cyclic word must be cyclically reduced");
    }
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Word& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  // Index taken mod size(); negative offsets allowed.
  Letter at(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(letters_.size());
    return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word letters_;
};

// ---------------------------------------------------------------------------
// Text syntax: lowercase = generator, uppercase = inverse. For rank > 26 the
// tokens g<k> / G<k> (k zero-based) are used instead.

inline Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw InputError("rank must be at least 1");
  Word out;
  if (rank <= 26) {
    for (char c : text) {
      int gen = -1;
      bool inv = false;
      if (c >= 'a' && c <= 'z') {
        gen = c - 'a';
      } else if (c >= 'A' && c <= 'Z') {
        gen = c - 'A';
        inv = true;
      }
      if (gen < 0 || gen >= rank) {
        throw InputError("letter '" + std::string(1, c) +
                         "' is outside the alphabet of rank " +
                         std::to_string(rank));
      }
      out.emplace_back(gen, inv);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'g' && c != 'G') {
      throw InputError("expected token g<k> or G<k> in '" + std::string(text) + "'");
    }
    std::size_t j = i + 1;
    int gen = 0;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
      gen = gen * 10 + (text[j] - '0');
      if (gen >= rank) break;
      ++j;
    }
    if (j == i + 1 || gen >= rank) {
      throw InputError("bad generator token in '" + std::string(text) + "'");
    }
    out.emplace_back(gen, c == 'G');
    i = j;
  }
  return out;
}

inline std::string to_string(Letter x, int rank = 0) {
  if (rank > 26 || x.generator() >= 26) {
    return (x.inverted() ? "G" : "g") + std::to_string(x.generator());
  }
  const char base = x.inverted() ? 'A' : 'a';
  return std::string(1, static_cast<char>(base + x.generator()));
}

inline std::string to_string(std::span<const Letter> w, int rank = 0) {
  std::string s;
  for (Letter x : w) s += to_string(x, rank);
  return s;
}

inline std::string to_string(const CyclicWord& w, int rank = 0) {
  return to_string(std::span<const Letter>(w.letters()), rank);
}

// ---------------------------------------------------------------------------

inline Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

// nullopt is the trivial class.
inline std::optional<CyclicWord> cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (lo == hi) return std::nullopt;
  return CyclicWord(Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
                         r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

// Start index of the least rotation (two-pointer minimum expression, O(n)).
inline std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const Letter x = s[(i + k) % n];
    const Letter y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

inline CyclicWord rotate(const CyclicWord& w, std::ptrdiff_t r) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w.at(static_cast<std::ptrdiff_t>(i) + r);
  }
  return CyclicWord(std::move(out));
}

inline CyclicWord canonical(const CyclicWord& w) {
  return rotate(w, static_cast<std::ptrdiff_t>(least_rotation(w.letters())));
}

inline bool is_canonical(const CyclicWord& w) {
  return canonical(w) == w;
}

// Reduce, then canonicalize. nullopt for the trivial class.
inline std::optional<CyclicWord> class_of(std::span<const Letter> w) {
  auto r = cyclic_reduce(w);
  if (!r) return std::nullopt;
  return canonical(*r);
}

// Parses a nontrivial class and returns its canonical representative.
inline CyclicWord parse_class(std::string_view text, int rank) {
  auto c = class_of(parse_word(text, rank));
  if (!c) throw InputError("'" + std::string(text) + "' is the trivial class");
  return *c;
}

struct PrimitiveRoot {
  CyclicWord root;
  int exponent = 1;
};

// root^exponent == w letter for letter, exponent maximal.
inline PrimitiveRoot primitive_root(const CyclicWord& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) {
      return {CyclicWord(Word(w.letters().begin(),
                              w.letters().begin() + static_cast<std::ptrdiff_t>(p))),
              static_cast<int>(n / p)};
    }
  }
  return {w, 1};
}

inline CyclicWord power(const CyclicWord& w, int m) {
  detail::require(m >= 1, "power exponent must be positive");
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return CyclicWord(std::move(out));
}

inline Word inverse(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = x.inverse();
  return out;
}

// Orientation reversal of a class; canonical result.
inline CyclicWord invert(const CyclicWord& w) {
  return canonical(CyclicWord(inverse(w.letters())));
}

// ---------------------------------------------------------------------------
// Canonical class representatives of a fixed length, ascending.
//
// Backtracking necklace generation (Fredricksen–Kessler–Maiorana) restricted
// to prefixes without adjacent inverse letters; a full-length prenecklace is
// emitted when it is a necklace and its wrap pair does not cancel.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(int rank, int length)
      : alphabet_(2 * rank), length_(length),
        a_(static_cast<std::size_t>(length) + 1),
        period_(static_cast<std::size_t>(length) + 1, 1),
        cursor_(static_cast<std::size_t>(length) + 2, 0) {
    detail::require(rank >= 1, "rank must be at least 1");
    detail::require(length >= 1, "length must be at least 1");
    depth_ = 1;
    cursor_[1] = 0;
  }

  // Writes the next representative into `out`; false when exhausted.
  bool next(Word& out) {
    const auto n = static_cast<std::size_t>(length_);
    while (depth_ > 0) {
      const std::size_t t = depth_;
      if (cursor_[t] >= alphabet_) {
        --depth_;
        if (depth_ > 0) ++cursor_[depth_];
        continue;
      }
      const Letter c = Letter::from_code(cursor_[t]);
      if (t > 1 && c == a_[t - 1].inverse()) {
        ++cursor_[t];
        continue;
      }
      a_[t] = c;
      const std::size_t p = period_[t - 1];
      period_[t] = c == a_[t - p] ? p : t;
      if (t == n) {
        ++cursor_[t];
        if (n % period_[n] == 0 && (n == 1 || a_[n] != a_[1].inverse())) {
          out.assign(a_.begin() + 1, a_.end());
          return true;
        }
        continue;
      }
      ++depth_;
      cursor_[depth_] = a_[depth_ - period_[depth_ - 1]].code();
    }
    return false;
  }

  std::optional<CyclicWord> next() {
    Word w;
    if (!next(w)) return std::nullopt;
    return CyclicWord(std::move(w));
  }

 private:
  int alphabet_;
  int length_;
  std::size_t depth_ = 0;
  Word a_;                          // 1-indexed prefix
  std::vector<std::size_t> period_; // period of the longest Lyndon prefix
  std::vector<int> cursor_;         // next candidate letter code per depth
};

inline std::vector<CyclicWord> enumerate_canonical(int rank, int length) {
  std::vector<CyclicWord> out;
  CanonicalEnumerator e(rank, length);
  while (auto w = e.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace gtlie
