#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace gtlie {
namespace {

using testing::cls;
using testing::cw;

// Independent of least_rotation(): try every rotation.
Word naive_least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    best = std::min(best, rot);
  }
  return best;
}

// Orbit count of cyclically reduced sequences under rotation, by brute force.
std::size_t brute_force_class_count(int rank, int len) {
  std::set<Word> orbits;
  const int k = 2 * rank;
  std::vector<int> digits(static_cast<std::size_t>(len), 0);
  for (;;) {
    Word w;
    for (int d : digits) w.push_back(Letter::from_code(d));
    bool reduced = true;
    for (int i = 0; i < len && reduced; ++i) {
      reduced = w[static_cast<std::size_t>((i + 1) % len)] != w[static_cast<std::size_t>(i)].inverse() || len == 1;
    }
    if (reduced) orbits.insert(naive_least_rotation(w));
    int pos = 0;
    while (pos < len && ++digits[static_cast<std::size_t>(pos)] == k) digits[static_cast<std::size_t>(pos++)] = 0;
    if (pos == len) break;
  }
  return orbits.size();
}

TEST(ParseWord, LettersMapToGenerators) {
  const Word w = parse_word("aB", 2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], Letter(0, false));
  EXPECT_EQ(w[1], Letter(1, true));
  EXPECT_TRUE(parse_word("", 2).empty());
  EXPECT_THROW(parse_word("c", 2), InputError);
  EXPECT_THROW(parse_word("a-", 2), InputError);
  EXPECT_THROW(parse_word("a", 0), InputError);
}

TEST(ParseWord, GeneratorTokensAboveRank26) {
  const Word w = parse_word("g0G29g3", 30);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Letter(0, false));
  EXPECT_EQ(w[1], Letter(29, true));
  EXPECT_EQ(w[2], Letter(3, false));
  EXPECT_EQ(to_string(std::span<const Letter>(w), 30), "g0G29g3");
  EXPECT_THROW(parse_word("g30", 30), InputError);
  EXPECT_THROW(parse_word("ab", 30), InputError);
  EXPECT_THROW(parse_word("g", 30), InputError);
}

TEST(LetterOrder, GeneratorThenPlainBeforeInverted) {
  EXPECT_LT(Letter(0, false), Letter(0, true));
  EXPECT_LT(Letter(0, true), Letter(1, false));
  EXPECT_EQ(Letter(1, true).inverse().inverse(), Letter(1, true));
  EXPECT_EQ(Letter(1, true).inverse(), Letter(1, false));
}

TEST(FreeReduce, Examples) {
  EXPECT_TRUE(free_reduce(parse_word("abBA", 2)).empty());
  EXPECT_EQ(to_string(std::span<const Letter>(free_reduce(parse_word("abBa", 2)))), "aa");
  EXPECT_EQ(to_string(std::span<const Letter>(free_reduce(parse_word("aB", 2)))), "aB");
}

TEST(CyclicReduce, Examples) {
  EXPECT_EQ(to_string(*cyclic_reduce(parse_word("baB", 2))), "a");
  EXPECT_FALSE(cyclic_reduce(parse_word("abBA", 2)).has_value());
  EXPECT_FALSE(cyclic_reduce(Word{}).has_value());
  EXPECT_EQ(to_string(*cyclic_reduce(parse_word("aB", 2))), "aB");
  EXPECT_EQ(to_string(*cyclic_reduce(parse_word("bAabaB", 2))), "ba");
}

TEST(CyclicWord, RejectsUnreducedInput) {
  EXPECT_THROW(CyclicWord(parse_word("aA", 2)), ContractViolation);
  EXPECT_THROW(CyclicWord(parse_word("abA", 2)), ContractViolation);
  EXPECT_THROW(CyclicWord(Word{}), ContractViolation);
  EXPECT_THROW(parse_class("abBA", 2), InputError);
  EXPECT_THROW(parse_class("", 2), InputError);
}

TEST(Canonical, Examples) {
  EXPECT_EQ(to_string(canonical(cw("ba"))), "ab");
  EXPECT_EQ(to_string(canonical(cw("Baa"))), "aaB");
  EXPECT_EQ(to_string(canonical(cw("aa"))), "aa");
}

TEST(PrimitiveRoot, Examples) {
  auto r = primitive_root(cw("abab"));
  EXPECT_EQ(to_string(r.root), "ab");
  EXPECT_EQ(r.exponent, 2);
  r = primitive_root(cw("aab"));
  EXPECT_EQ(to_string(r.root), "aab");
  EXPECT_EQ(r.exponent, 1);
  r = primitive_root(cw("aaa"));
  EXPECT_EQ(to_string(r.root), "a");
  EXPECT_EQ(r.exponent, 3);
}

TEST(Invert, Examples) {
  EXPECT_EQ(to_string(invert(cw("ab"))), "AB");
  EXPECT_EQ(to_string(invert(cw("a"))), "A");
  EXPECT_EQ(to_string(invert(cw("aB"))), "Ab");
}

TEST(Enumerate, SmallCases) {
  auto one = enumerate_canonical(2, 1);
  ASSERT_EQ(one.size(), 4u);
  EXPECT_EQ(to_string(one[0]), "a");
  EXPECT_EQ(to_string(one[1]), "A");
  EXPECT_EQ(to_string(one[2]), "b");
  EXPECT_EQ(to_string(one[3]), "B");
  EXPECT_EQ(enumerate_canonical(2, 2).size(), 8u);
  for (int m = 1; m <= 6; ++m) {
    auto rank1 = enumerate_canonical(1, m);
    ASSERT_EQ(rank1.size(), 2u);
    EXPECT_EQ(rank1[0], power(cw("a", 1), m));
    EXPECT_EQ(rank1[1], power(cw("A", 1), m));
  }
}

TEST(Enumerate, CountsMatchBruteForceOrbits) {
  // Frozen brute-force orbit counts for rank 2; the loop recomputes them.
  const std::size_t frozen[] = {4, 8, 12, 26, 52, 132, 316, 836};
  for (int len = 1; len <= 8; ++len) {
    const std::size_t expected = brute_force_class_count(2, len);
    EXPECT_EQ(expected, frozen[len - 1]);
    EXPECT_EQ(enumerate_canonical(2, len).size(), expected) << "length " << len;
  }
  for (int len = 1; len <= 5; ++len) {
    EXPECT_EQ(enumerate_canonical(3, len).size(), brute_force_class_count(3, len));
  }
}

TEST(Enumerate, AscendingAndMinimalAmongRotations) {
  for (int len = 1; len <= 8; ++len) {
    auto words = enumerate_canonical(2, len);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    EXPECT_TRUE(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const auto& w : words) {
      for (std::size_t r = 0; r < w.size(); ++r) {
        EXPECT_LE(w, rotate(w, static_cast<std::ptrdiff_t>(r)));
      }
    }
  }
}

TEST(Properties, CanonicalIsRotationInvariantAndIdempotent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    auto c = cyclic_reduce(testing::random_reduced(rng, rank, 1 + static_cast<int>(rng() % 14)));
    if (!c) continue;
    const CyclicWord canon = canonical(*c);
    EXPECT_EQ(canonical(canon), canon);
    EXPECT_EQ(canon.letters(), naive_least_rotation(c->letters()));
    for (std::size_t r = 0; r < c->size(); ++r) {
      EXPECT_EQ(canonical(rotate(*c, static_cast<std::ptrdiff_t>(r))), canon);
    }
  }
}

TEST(Properties, CancellingPairInsertionDoesNotChangeClass) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = testing::random_reduced(rng, 2, 1 + static_cast<int>(rng() % 10));
    const auto before = class_of(w);
    const Letter x = Letter::from_code(static_cast<int>(rng() % 4));
    const auto at = static_cast<std::ptrdiff_t>(rng() % (w.size() + 1));
    w.insert(w.begin() + at, {x, x.inverse()});
    EXPECT_EQ(class_of(w), before);
  }
}

TEST(Properties, PrimitiveRootReconstructsAndInvertIsInvolution) {
  for (const auto& w : testing::all_classes(2, 8)) {
    const auto [root, m] = primitive_root(w);
    EXPECT_EQ(canonical(power(root, m)), w);
    EXPECT_EQ(primitive_root(root).exponent, 1);
    EXPECT_EQ(invert(invert(w)), w);
    EXPECT_NE(invert(w), w);
  }
}

}  // namespace
}  // namespace gtlie
