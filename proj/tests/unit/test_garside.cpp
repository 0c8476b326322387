#include <gtest/gtest.h>

#include "oracles/relation_oracle.hpp"
#include "oracles/qp_bruteforce.hpp"
#include "quasibraid/error.hpp"
#include "quasibraid/garside.hpp"
#include "support/generators.hpp"

using namespace quasibraid;
using testing_support::random_word;

TEST(NormalForm, HalfTwist) {
  const CanonicalForm nf = to_normal_form(BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(nf.infimum, 1);
  EXPECT_TRUE(nf.factors.empty());
  EXPECT_EQ(from_normal_form(nf), BraidWord(3, {1, 2, 1}));
}

TEST(NormalForm, TwoStrandsGeneratorIsDelta) {
  const CanonicalForm nf = to_normal_form(BraidWord(2, {1, 1}));
  EXPECT_EQ(nf.infimum, 2);
  EXPECT_TRUE(nf.factors.empty());
}

TEST(NormalForm, MixedSigns) {
  const CanonicalForm nf = to_normal_form(BraidWord(3, {1, -2}));
  EXPECT_EQ(nf.infimum, -1);
  EXPECT_EQ(nf.factors.size(), 2u);
  EXPECT_TRUE(garside::is_valid(nf));
}

TEST(NormalForm, Identity) {
  EXPECT_TRUE(to_normal_form(BraidWord(4, {})).is_identity());
  EXPECT_TRUE(from_normal_form(CanonicalForm{3, 0, {}}).empty());
}

TEST(WordsEqual, Relations) {
  EXPECT_TRUE(words_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  EXPECT_TRUE(words_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  EXPECT_FALSE(words_equal(BraidWord(2, {1}), BraidWord(2, {-1})));
  EXPECT_FALSE(words_equal(BraidWord(4, {1, 2}), BraidWord(4, {2, 1})));
  EXPECT_THROW(words_equal(BraidWord(2, {}), BraidWord(3, {})), InvalidInput);
}

TEST(Simple, StartingAndFinishingSets) {
  // sigma_1 sigma_2 in B_3: only sigma_1 divides on the left, only sigma_2 on the right.
  const Permutation p = underlying_permutation(BraidWord(3, {1, 2}));
  EXPECT_EQ(garside::starting_set(p), (std::vector<bool>{true, false}));
  EXPECT_EQ(garside::finishing_set(p), (std::vector<bool>{false, true}));
  EXPECT_EQ(garside::simple_to_word(p), BraidWord(3, {1, 2}));
}

namespace {

/// Applies one random braid relation or free insertion somewhere in w.
BraidWord random_relation(Rng& rng, const BraidWord& w) {
  std::vector<Letter> l = w.letters();
  const int n = w.strands();
  for (int attempt = 0; attempt < 20 && n > 1; ++attempt) {
    const std::size_t pos = rng.below(l.size() + 1);
    switch (rng.below(3)) {
      case 0: {
        const Letter x = testing_support::random_letter(rng, n);
        l.insert(l.begin() + static_cast<long>(pos), {x, -x});
        return BraidWord(n, l);
      }
      case 1:
        if (pos + 3 <= l.size() && l[pos] == l[pos + 2] && std::abs(std::abs(l[pos]) - std::abs(l[pos + 1])) == 1 &&
            (l[pos] > 0) == (l[pos + 1] > 0)) {
          std::swap(l[pos], l[pos + 1]);
          l[pos + 2] = l[pos];
          return BraidWord(n, l);
        }
        break;
      default:
        if (pos + 2 <= l.size() && std::abs(std::abs(l[pos]) - std::abs(l[pos + 1])) >= 2) {
          std::swap(l[pos], l[pos + 1]);
          return BraidWord(n, l);
        }
    }
  }
  return w;
}

}  // namespace

TEST(NormalFormProperty, ConfluentUnderRelations) {
  Rng rng(7);
  for (int i = 0; i < 400; ++i) {
    const int n = rng.between(2, 5);
    BraidWord w = random_word(rng, n, 12);
    const CanonicalForm nf = to_normal_form(w);
    EXPECT_TRUE(garside::is_valid(nf));
    EXPECT_TRUE(words_equal(from_normal_form(nf), w));
    EXPECT_EQ(writhe(from_normal_form(nf)), writhe(w));
    for (int k = 0; k < 6; ++k) {
      w = random_relation(rng, w);
      ASSERT_EQ(to_normal_form(w), nf) << w.to_string();
    }
    EXPECT_EQ(to_normal_form(free_reduce(w)), nf);
  }
}

TEST(NormalFormProperty, LeftWeightedFactors) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const CanonicalForm nf = to_normal_form(random_word(rng, rng.between(2, 6), 16));
    const int n = nf.strands;
    for (std::size_t j = 0; j < nf.factors.size(); ++j) {
      EXPECT_FALSE(nf.factors[j].is_identity());
      EXPECT_NE(nf.factors[j], Permutation::reversal(n));
      if (j + 1 < nf.factors.size()) EXPECT_TRUE(garside::is_left_weighted(nf.factors[j], nf.factors[j + 1]));
    }
  }
}

TEST(Oracle, WordsEqualMatchesRelationClosureOnB3) {
  oracle::B3RelationOracle relations(8);
  const auto words = oracle::all_words(3, 6);
  std::map<CanonicalForm, std::size_t> class_of_form;
  std::map<std::size_t, CanonicalForm> form_of_class;
  for (const BraidWord& w : words) {
    const CanonicalForm nf = to_normal_form(w);
    const std::size_t c = relations.class_of(w.letters());
    const auto [a, fresh_form] = class_of_form.emplace(nf, c);
    const auto [b, fresh_class] = form_of_class.emplace(c, nf);
    ASSERT_EQ(a->second, c) << w.to_string();
    ASSERT_EQ(b->second, nf) << w.to_string();
  }
  EXPECT_EQ(class_of_form.size(), form_of_class.size());
  Rng rng(3);
  for (int i = 0; i < 20000; ++i) {
    const BraidWord& a = words[rng.below(words.size())];
    const BraidWord& b = words[rng.below(words.size())];
    ASSERT_EQ(words_equal(a, b), relations.equal(a.letters(), b.letters())) << a.to_string() << " / " << b.to_string();
  }
}
