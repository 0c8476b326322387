#include <gtest/gtest.h>

#include <set>

#include "quasibraid/garside.hpp"
#include "quasibraid/moves.hpp"
#include "quasibraid/search.hpp"
#include "support/generators.hpp"

using namespace quasibraid;

namespace {

SearchBudget small(std::size_t nodes, int max_strands = 4) {
  SearchBudget b;
  b.max_nodes = nodes;
  b.max_strands = max_strands;
  return b;
}

}  // namespace

TEST(Explore, DestabilizesTrefoilStabilization) {
  const ReachabilityReport r = explore(BraidWord(3, {1, 1, 1, 2}), small(200));
  EXPECT_EQ(r.min_strands, 2);
  bool found = false;
  for (std::size_t i : r.minimal) found = found || words_equal(r.states[i].word, BraidWord(2, {1, 1, 1}));
  EXPECT_TRUE(found);
}

TEST(Explore, ReachesUnknotFromMixedStabilization) {
  const ReachabilityReport r = explore(BraidWord(3, {1, -2}), small(200));
  EXPECT_EQ(r.min_strands, 1);
  EXPECT_TRUE(r.points.count({0, 1}));
}

TEST(Explore, TrefoilPointsStayInCone) {
  const ReachabilityReport r = explore(BraidWord(2, {1, 1, 1}), small(2000, 5));
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_GT(r.points.size(), 3u);
  for (const ConePoint& p : r.points) {
    EXPECT_TRUE(cone_contains({3, 2}, p)) << p.w << "," << p.n;
    EXPECT_LE(p.n, 5);
  }
  EXPECT_EQ(r.max_self_linking, 1);
}

TEST(Explore, StatesAreDistinctAndReplayable) {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const BraidWord w = testing_support::random_word(rng, rng.between(2, 4), 8);
    const ReachabilityReport r = explore(w, small(300));
    std::set<CanonicalForm> forms;
    for (const VisitedState& s : r.states) {
      EXPECT_TRUE(forms.insert(to_normal_form(s.word)).second) << "duplicate class";
    }
    for (int k = 0; k < 10; ++k) {
      const std::size_t idx = rng.below(r.states.size());
      const MoveSequence seq = r.sequence_to(idx);
      EXPECT_EQ(seq.initial, w);
      EXPECT_TRUE(words_equal(replay(seq), r.states[idx].word));
    }
  }
}

TEST(Explore, Deterministic) {
  const BraidWord w(4, {1, -2, 3, 2, -1, 3});
  const ReachabilityReport a = explore(w, small(500));
  const ReachabilityReport b = explore(w, small(500));
  ASSERT_EQ(a.states.size(), b.states.size());
  for (std::size_t i = 0; i < a.states.size(); ++i) EXPECT_EQ(a.states[i].word, b.states[i].word);
  EXPECT_EQ(a.points, b.points);
}

TEST(Explore, StopWhen) {
  ExploreOptions options;
  options.order = ExploreOrder::BestFirst;
  options.stop_when = [](const BraidWord& w) { return w.strands() == 2; };
  const ReachabilityReport r = explore(BraidWord(4, {1, 1, 1, 2, 3}), small(5000), options);
  ASSERT_TRUE(r.stopped_at.has_value());
  EXPECT_EQ(r.states[*r.stopped_at].word.strands(), 2);
  EXPECT_FALSE(r.budget_exhausted);
}

TEST(MinimalRepresentatives, Trefoil) {
  const MinimalRepresentatives m = find_minimal_representatives(BraidWord(2, {1, 1, 1}), {});
  EXPECT_TRUE(m.certified);
  EXPECT_EQ(m.strands, 2);
  EXPECT_EQ(m.mfw_lower, 2);
  ASSERT_FALSE(m.words.empty());
  EXPECT_EQ(m.words.front(), BraidWord(2, {1, 1, 1}));
  for (std::size_t i = 0; i < m.words.size(); ++i) {
    EXPECT_EQ(m.words[i].strands(), 2);
    EXPECT_TRUE(words_equal(replay(m.sequence_to(i)), m.words[i]));
  }
}

TEST(MinimalRepresentatives, UnlinkOnFourStrandsCollapses) {
  const MinimalRepresentatives m = find_minimal_representatives(BraidWord(4, {}), {});
  // Four split unknots: the braid index is four, and the input is already minimal.
  EXPECT_TRUE(m.certified);
  EXPECT_EQ(m.strands, 4);
  const MinimalRepresentatives k = find_minimal_representatives(BraidWord(4, {1, 2, 3}), {});
  EXPECT_TRUE(k.certified);
  EXPECT_EQ(k.strands, 1);
  EXPECT_TRUE(k.words.front().empty());
}

TEST(MinimalRepresentatives, StarvedBudgetIsFlagged) {
  const MinimalRepresentatives m = find_minimal_representatives(BraidWord(4, {2, 1, 3, 2, -1, 3}), small(1));
  EXPECT_FALSE(m.certified);
  EXPECT_TRUE(m.budget_exhausted);
}

TEST(SearchProperty, GeneralizedJonesOnCertifiedInputs) {
  Rng rng(71);
  int certified = 0;
  for (int i = 0; i < 25; ++i) {
    const BraidWord w = testing_support::random_word(rng, rng.between(2, 4), 8);
    const MinimalRepresentatives m = find_minimal_representatives(w, small(1500));
    if (!m.certified) continue;
    ++certified;
    const ConePoint apex = cone_point(m.words.front());
    for (const ConePoint& p : m.report.points) EXPECT_TRUE(jones_inequality_holds(p, apex));
    for (const ConePoint& p : m.orbit.points) EXPECT_TRUE(jones_inequality_holds(p, apex));
  }
  EXPECT_GT(certified, 10);
}
