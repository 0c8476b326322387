#include <gtest/gtest.h>

#include "quasibraid/bounds.hpp"
#include "quasibraid/error.hpp"

using namespace quasibraid;

namespace {

QPFactorization trefoil() { return QPFactorization(2, {{BraidWord(2, {}), 1}, {BraidWord(2, {}), 1}, {BraidWord(2, {}), 1}}); }

int count_destabilizations(const MoveSequence& seq) {
  int n = 0;
  for (const MoveStep& s : seq.steps) n += std::holds_alternative<step::Destabilize>(s);
  return n;
}

}  // namespace

TEST(Unlink, Status) {
  const UnlinkResult a = unlink_status(BraidWord(3, {}), {});
  EXPECT_EQ(a.status, UnlinkStatus::Unlink);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_TRUE(a.witness->steps.empty());

  EXPECT_EQ(unlink_status(BraidWord(2, {1, 1, 1}), {}).status, UnlinkStatus::NotUnlink);

  const UnlinkResult c = unlink_status(BraidWord(3, {1, -2}), {});
  ASSERT_EQ(c.status, UnlinkStatus::Unlink);
  EXPECT_EQ(count_destabilizations(*c.witness), 2);
  EXPECT_EQ(replay(*c.witness), BraidWord(1, {}));
}

TEST(Unlink, SplitComponentNeedsRenumbering) {
  const UnlinkResult r = unlink_status(BraidWord(4, {2}), {});
  ASSERT_EQ(r.status, UnlinkStatus::Unlink);
  EXPECT_EQ(replay(*r.witness), BraidWord(3, {}));
}

TEST(Unlink, UnknownWhenStarved) {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  EXPECT_EQ(unlink_status(BraidWord(4, {2, 1, -2, -1}), tiny).status, UnlinkStatus::Unknown);
}

TEST(BraidIndex, Bounds) {
  const BoundedInvariant a = braid_index_bounds(BraidWord(2, {1, 1, 1}), {});
  EXPECT_EQ(a.lower, 2);
  EXPECT_EQ(a.upper, 2);
  EXPECT_TRUE(a.exact());
  const BoundedInvariant b = braid_index_bounds(BraidWord(1, {}), {});
  EXPECT_TRUE(b.exact());
  EXPECT_EQ(b.upper, 1);
  const BoundedInvariant c = braid_index_bounds(BraidWord(3, {1, 1, 1, 2}), {});
  EXPECT_EQ(c.lower, 2);
  EXPECT_EQ(c.upper, 2);
  EXPECT_TRUE(c.consistent());
}

TEST(SelfLinkingBounds, Examples) {
  const BoundedInvariant a = max_self_linking_bounds(BraidWord(2, {1, 1, 1}), {}, trefoil());
  EXPECT_EQ(a.lower, 1);
  EXPECT_EQ(a.upper, 1);
  EXPECT_TRUE(a.exact());

  const BoundedInvariant b = max_self_linking_bounds(BraidWord(2, {}), {});
  EXPECT_EQ(b.lower, -2);
  EXPECT_EQ(b.upper, -2);

  const BoundedInvariant c = max_self_linking_bounds(BraidWord(2, {-1, -1, -1}), {});
  EXPECT_EQ(c.upper, -5);
  EXPECT_TRUE(c.consistent());

  const BoundedInvariant d = max_self_linking_bounds(BraidWord(2, {1, 1, 1}), {});
  EXPECT_EQ(d.lower, 1);
  EXPECT_EQ(d.upper, 1);
}

TEST(SelfLinkingBounds, RejectsMismatchedFactorization) {
  EXPECT_THROW(max_self_linking_bounds(BraidWord(2, {1, 1}), {}, trefoil()), InvalidInput);
  EXPECT_THROW(max_self_linking_bounds(BraidWord(3, {1, 1, 1}), {}, trefoil()), InvalidInput);
}
