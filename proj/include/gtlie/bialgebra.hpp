#pragma once

// The Turaev cobracket and the Goldman bracket on the free module spanned by
// nontrivial free homotopy classes, with exact integer coefficients, and a
// checker for the Lie bialgebra identities.
//
// Powers w = v^m are handled through the taut picture of m parallel copies
// of v closed up by a spiral: each crossing of v becomes m^2 crossings, and
// the crossing between copies at offset d splits w into
//   alpha (beta alpha)^d  and  beta (alpha beta)^(m-1-d).
// The m-1 spiral crossings split w into v^t (x) v^(m-t) with equal signs and
// cancel in pairs t <-> m-t, so they are not generated.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gtlie/cyclic_word.hpp"
#include "gtlie/errors.hpp"
#include "gtlie/formal_sum.hpp"
#include "gtlie/linking.hpp"
#include "gtlie/surface.hpp"

namespace gtlie {

// Diagnostics of split terms. A split word needs cyclic reduction when the
// crossing sits at the end of an antiparallel shared segment.
struct SplitStats {
  std::uint64_t terms = 0;
  std::uint64_t reduced = 0;
};

namespace detail {

inline Word cyclic_slice(const CyclicWord& w, std::size_t from, std::size_t len) {
  Word out(len);
  for (std::size_t t = 0; t < len; ++t) {
    out[t] = w.at(static_cast<std::ptrdiff_t>(from + t));
  }
  return out;
}

inline void append(Word& dst, const Word& src, int times = 1) {
  for (int k = 0; k < times; ++k) dst.insert(dst.end(), src.begin(), src.end());
}

// Class of a split or merged word; never trivial for taut curves.
inline CyclicWord term_class(const Word& w, SplitStats* stats) {
  auto c = cyclic_reduce(w);
  ensure(c.has_value(), "trivial term " + to_string(std::span<const Letter>(w)));
  if (stats) {
    ++stats->terms;
    if (c->size() != w.size()) ++stats->reduced;
  }
  return canonical(*c);
}

inline void require_nontrivial(const CyclicWord& w) {
  if (w.empty()) throw InputError("the trivial class has no cobracket or bracket");
}

}  // namespace detail

inline TensorSum cobracket(const RibbonGraph& r, const CyclicWord& w, SplitStats* stats = nullptr) {
  detail::require_nontrivial(w);
  const auto [v, m] = primitive_root(w);
  const std::size_t n = v.size();
  TensorSum out;
  for (const LinkedPair& lp : linked_pairs(r, v)) {
    const Word alpha = detail::cyclic_slice(v, lp.i, lp.j - lp.i);
    const Word beta = detail::cyclic_slice(v, lp.j, n - (lp.j - lp.i));
    Word ab = alpha;
    detail::append(ab, beta);
    Word ba = beta;
    detail::append(ba, alpha);
    const Integer coeff = Integer(m) * lp.sign;
    for (int d = 0; d < m; ++d) {
      Word first = alpha;
      detail::append(first, ba, d);
      Word second = beta;
      detail::append(second, ab, m - 1 - d);
      CyclicWord x = detail::term_class(first, stats);
      CyclicWord y = detail::term_class(second, stats);
      out.add({x, y}, coeff);
      out.add({std::move(y), std::move(x)}, -coeff);
    }
  }
  return out;
}

inline ClassSum bracket(const RibbonGraph& r, const CyclicWord& u, const CyclicWord& w,
                        SplitStats* stats = nullptr) {
  detail::require_nontrivial(u);
  detail::require_nontrivial(w);
  ClassSum out;
  if (canonical(u) == canonical(w)) return out;
  const auto [p, s] = primitive_root(u);
  const auto [q, t] = primitive_root(w);
  const bool same_root = canonical(p) == canonical(q);
  // Corners of the shared root are aligned by working on one representative.
  const CyclicWord& q_rep = same_root ? p : q;
  const auto pairs = same_root ? ordered_linked_pairs(r, p) : linked_pairs_between(r, p, q);
  for (const LinkedPair& lp : pairs) {
    Word merged;
    detail::append(merged, rotate(p, static_cast<std::ptrdiff_t>(lp.i)).letters(), s);
    detail::append(merged, rotate(q_rep, static_cast<std::ptrdiff_t>(lp.j)).letters(), t);
    out.add(detail::term_class(merged, stats), Integer(s) * t * lp.sign);
  }
  return out;
}

inline TensorSum cobracket_on_sum(const RibbonGraph& r, const ClassSum& sum) {
  TensorSum out;
  for (const auto& [w, c] : sum) out += c * cobracket(r, w);
  return out;
}

inline ClassSum bracket_on_sums(const RibbonGraph& r, const ClassSum& a, const ClassSum& b) {
  ClassSum out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out += (c * d) * bracket(r, x, y);
  }
  return out;
}

// x . (a (x) b) = [x, a] (x) b + a (x) [x, b]
inline TensorSum act(const RibbonGraph& r, const CyclicWord& x, const TensorSum& t) {
  TensorSum out;
  for (const auto& [k, c] : t) {
    const ClassSum left = bracket(r, x, k.first);
    const ClassSum right = bracket(r, x, k.second);
    out += c * tensor(left, ClassSum(k.second));
    out += c * tensor(ClassSum(k.first), right);
  }
  return out;
}

// Linear extension of orientation reversal to both tensor factors.
inline TensorSum invert_factors(const TensorSum& t) {
  return t.map_keys([](const auto& k) { return std::pair{invert(k.first), invert(k.second)}; });
}

// (Delta (x) id) o Delta
inline Tensor3Sum iterated_cobracket(const RibbonGraph& r, const CyclicWord& w) {
  Tensor3Sum out;
  for (const auto& [k, c] : cobracket(r, w)) out += c * tensor(cobracket(r, k.first), k.second);
  return out;
}

// ---------------------------------------------------------------------------

enum class Identity {
  co_antisymmetry,
  co_jacobi,
  antisymmetry,
  jacobi,
  compatibility,
  inverse_rule,
};

inline const char* identity_name(Identity id) {
  switch (id) {
    case Identity::co_antisymmetry: return "co-antisymmetry";
    case Identity::co_jacobi: return "co-jacobi";
    case Identity::antisymmetry: return "antisymmetry";
    case Identity::jacobi: return "jacobi";
    case Identity::compatibility: return "compatibility";
    case Identity::inverse_rule: return "inverse-rule";
  }
  return "?";
}

struct IdentityResult {
  Identity identity;
  std::uint64_t checked = 0;
  std::vector<std::vector<CyclicWord>> failures;  // witness words

  bool ok() const { return failures.empty(); }
};

struct AxiomReport {
  std::vector<IdentityResult> results;

  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
  }
  const IdentityResult* find(Identity id) const {
    for (const auto& r : results) {
      if (r.identity == id) return &r;
    }
    return nullptr;
  }
};

struct AxiomOptions {
  // Identities of a single word, checked on every word of the sample.
  bool co_antisymmetry = true;
  bool co_jacobi = true;
  bool inverse_rule = true;
  // Random pairs (antisymmetry, compatibility) and triples (Jacobi).
  std::size_t pair_samples = 200;
  std::size_t triple_samples = 200;
  std::uint64_t seed = 1;
};

inline AxiomReport axiom_check(const RibbonGraph& r, std::span<const CyclicWord> words,
                               const AxiomOptions& opt = {}) {
  AxiomReport rep;
  auto record = [&](Identity id, bool holds, std::vector<CyclicWord> witness) {
    auto it = std::find_if(rep.results.begin(), rep.results.end(),
                           [&](const auto& x) { return x.identity == id; });
    if (it == rep.results.end()) {
      rep.results.push_back({id, 0, {}});
      it = std::prev(rep.results.end());
    }
    ++it->checked;
    if (!holds) it->failures.push_back(std::move(witness));
  };

  for (const CyclicWord& raw : words) {
    const CyclicWord w = canonical(raw);
    const TensorSum d = cobracket(r, w);
    if (opt.co_antisymmetry) {
      record(Identity::co_antisymmetry, d == -swap_factors(d), {w});
    }
    if (opt.co_jacobi) {
      const Tensor3Sum t = iterated_cobracket(r, w);
      const Tensor3Sum t1 = cycle_factors(t);
      const Tensor3Sum t2 = cycle_factors(t1);
      record(Identity::co_jacobi, (t + t1 + t2).empty(), {w});
    }
    if (opt.inverse_rule) {
      record(Identity::inverse_rule, cobracket(r, invert(w)) == -invert_factors(d), {w});
    }
  }

  if (words.empty()) return rep;
  std::mt19937_64 rng(opt.seed);
  auto pick = [&]() -> CyclicWord {
    return canonical(words[static_cast<std::size_t>(rng() % words.size())]);
  };
  for (std::size_t k = 0; k < opt.pair_samples; ++k) {
    const CyclicWord x = pick();
    const CyclicWord y = pick();
    const ClassSum xy = bracket(r, x, y);
    record(Identity::antisymmetry, xy == -bracket(r, y, x), {x, y});
    const TensorSum lhs = cobracket_on_sum(r, xy);
    const TensorSum rhs = act(r, x, cobracket(r, y)) - act(r, y, cobracket(r, x));
    record(Identity::compatibility, lhs == rhs, {x, y});
  }
  for (std::size_t k = 0; k < opt.triple_samples; ++k) {
    const CyclicWord x = pick();
    const CyclicWord y = pick();
    const CyclicWord z = pick();
    const ClassSum zs(z), xs(x), ys(y);
    const ClassSum jac = bracket_on_sums(r, bracket(r, x, y), zs) +
                         bracket_on_sums(r, bracket(r, y, z), xs) +
                         bracket_on_sums(r, bracket(r, z, x), ys);
    record(Identity::jacobi, jac.empty(), {x, y, z});
  }
  return rep;
}

}  // namespace gtlie
