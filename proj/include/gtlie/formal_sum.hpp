#pragma once

// Exact integer linear combinations over canonical classes and tuples of
// classes. Zero coefficients are never stored; iteration is lexicographic.

#include <array>
#include <map>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtlie/cyclic_word.hpp"

namespace gtlie {

using Integer = boost::multiprecision::cpp_int;

template <class Key>
class FormalSum {
 public:
  using map_type = std::map<Key, Integer>;
  using const_iterator = typename map_type::const_iterator;

  FormalSum() = default;
  explicit FormalSum(Key k, Integer c = 1) { add(std::move(k), std::move(c)); }

  void add(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  // Sum of |coefficients|.
  Integer mass() const {
    Integer m = 0;
    for (const auto& [k, c] : terms_) m += abs(c);
    return m;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FormalSum& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Integer(-1); }
  friend FormalSum operator*(const Integer& s, FormalSum a) { return a *= s; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  // Applies f to every key (linear extension of a map on the basis).
  template <class F>
  auto map_keys(F&& f) const {
    FormalSum<std::invoke_result_t<F, const Key&>> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

using ClassSum = FormalSum<CyclicWord>;
using TensorSum = FormalSum<std::pair<CyclicWord, CyclicWord>>;
using Tensor3Sum = FormalSum<std::array<CyclicWord, 3>>;

// x (x) y -> y (x) x
inline TensorSum swap_factors(const TensorSum& t) {
  return t.map_keys([](const auto& k) { return std::pair{k.second, k.first}; });
}

// x (x) y (x) z -> z (x) x (x) y
inline Tensor3Sum cycle_factors(const Tensor3Sum& t) {
  return t.map_keys([](const auto& k) { return std::array{k[2], k[0], k[1]}; });
}

inline TensorSum tensor(const ClassSum& a, const ClassSum& b) {
  TensorSum out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out.add({x, y}, c * d);
  }
  return out;
}

inline Tensor3Sum tensor(const TensorSum& a, const CyclicWord& z) {
  return a.map_keys([&](const auto& k) { return std::array{k.first, k.second, z}; });
}

// "+1 ab -2 aB"; "0" for the empty sum.
inline std::string to_string(const ClassSum& s, int rank = 0) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : s) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.str() + ' ' + to_string(w, rank);
  }
  return out;
}

// "-1 (a|B) +1 (B|a)"; "0" for the empty sum.
inline std::string to_string(const TensorSum& s, int rank = 0) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : s) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.str() + " (" + to_string(k.first, rank) + '|' +
           to_string(k.second, rank) + ')';
  }
  return out;
}

inline std::string to_string(const Tensor3Sum& s, int rank = 0) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : s) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + c.str() + " (" + to_string(k[0], rank) + '|' +
           to_string(k[1], rank) + '|' + to_string(k[2], rank) + ')';
  }
  return out;
}

}  // namespace gtlie
