#include <gtest/gtest.h>

#include "quasibraid/braid_word.hpp"
#include "quasibraid/error.hpp"
#include "quasibraid/permutation.hpp"
#include "support/generators.hpp"

using namespace quasibraid;
using testing_support::random_word;

TEST(Parse, TranscribesLetters) {
  EXPECT_EQ(parse_braid("1 1 1", 2), BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(parse_braid("", 1), BraidWord(1, {}));
  EXPECT_EQ(parse_braid("1 -2", 3), BraidWord(3, {1, -2}));
  EXPECT_EQ(parse_braid("  +1\t-2\n", 3), BraidWord(3, {1, -2}));
}

TEST(Parse, RejectsBadInput) {
  EXPECT_THROW(parse_braid("0", 2), InvalidInput);
  EXPECT_THROW(parse_braid("2", 2), InvalidInput);
  EXPECT_THROW(parse_braid("-3", 3), InvalidInput);
  EXPECT_THROW(parse_braid("1 x", 3), InvalidInput);
  EXPECT_THROW(parse_braid("1.5", 3), InvalidInput);
  EXPECT_THROW(parse_braid("1", 1), InvalidInput);
  EXPECT_THROW(BraidWord(0, {}), InvalidInput);
}

TEST(Writhe, SumsSigns) {
  EXPECT_EQ(writhe(BraidWord(2, {1, 1, 1})), 3);
  EXPECT_EQ(writhe(BraidWord(3, {})), 0);
  EXPECT_EQ(writhe(BraidWord(3, {1, -2})), 0);
}

TEST(Permutation, ImageOfGenerators) {
  EXPECT_EQ(underlying_permutation(BraidWord(2, {1})).to_cycle_string(), "(1 2)");
  EXPECT_TRUE(underlying_permutation(BraidWord(2, {1, 1})).is_identity());
  const Permutation p = underlying_permutation(BraidWord(3, {1, 2}));
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p.to_cycle_string(), "(1 2 3)");
}

TEST(Permutation, GroupLaws) {
  const Permutation a = Permutation::adjacent(4, 1), b = Permutation::reversal(4);
  EXPECT_TRUE((a * a).is_identity());
  EXPECT_TRUE((b * b.inverse()).is_identity());
  EXPECT_EQ(Permutation::identity(3).cycle_count(), 3);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0}), InvalidInput);
}

TEST(Components, CountsCycles) {
  EXPECT_EQ(component_count(BraidWord(2, {1, 1, 1})), 1);
  EXPECT_EQ(component_count(BraidWord(2, {})), 2);
  EXPECT_EQ(component_count(BraidWord(2, {1, 1})), 2);
}

TEST(Mirror, FlipsSigns) {
  EXPECT_EQ(mirror(BraidWord(2, {1, 1, 1})), BraidWord(2, {-1, -1, -1}));
  EXPECT_EQ(mirror(BraidWord(2, {})), BraidWord(2, {}));
  EXPECT_EQ(mirror(BraidWord(3, {1, -2})), BraidWord(3, {-1, 2}));
}

TEST(FreeReduce, CancelsAdjacentPairs) {
  EXPECT_TRUE(free_reduce(BraidWord(2, {1, -1})).empty());
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, -2, 1})), BraidWord(3, {1, 1}));
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, -1})), BraidWord(3, {1, 2, -1}));
}

TEST(CyclicReduce, StripsConjugatePairs) {
  EXPECT_EQ(cyclic_reduce(BraidWord(3, {2, 1, 1, -2})), BraidWord(3, {1, 1}));
  EXPECT_EQ(rotate(BraidWord(3, {1, 2, -1}), 1), BraidWord(3, {2, -1, 1}));
}

TEST(BraidWordProperty, RandomWords) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const int n = rng.between(1, 5);
    const BraidWord w = random_word(rng, n, 20), u = random_word(rng, n, 8);
    const BraidWord r = free_reduce(w);
    EXPECT_EQ(writhe(r), writhe(w));
    EXPECT_EQ(underlying_permutation(r), underlying_permutation(w));
    EXPECT_EQ(component_count(r), component_count(w));
    EXPECT_EQ(writhe(mirror(w)), -writhe(w));
    EXPECT_EQ(mirror(mirror(w)), w);
    EXPECT_EQ(underlying_permutation(w * u), underlying_permutation(w) * underlying_permutation(u));
    EXPECT_TRUE(free_reduce(w * w.inverse()).empty());
  }
}

TEST(ReducedWords, LengthLexEnumeration) {
  const auto words = reduced_words_up_to(3, 2);
  ASSERT_EQ(words.size(), 1u + 4u + 12u);
  EXPECT_TRUE(words.front().empty());
  EXPECT_EQ(words[1], BraidWord(3, {1}));
  EXPECT_EQ(words[2], BraidWord(3, {-1}));
}
