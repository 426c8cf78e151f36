#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wmilnor;

namespace {

GaussCode r3_configuration() {
  // a: 1 over 2, b: 1 over 3, c: 2 over 3
  GaussCode c(3);
  c.strand(1) = {{1, Role::over, 1}, {2, Role::over, 1}};
  c.strand(2) = {{1, Role::under, 1}, {3, Role::over, 1}};
  c.strand(3) = {{2, Role::under, 1}, {3, Role::under, 1}};
  return c;
}

}  // namespace

TEST(GaussCode, TrivialIsValid) {
  const auto t = GaussCode::trivial(3);
  EXPECT_TRUE(validate(t).ok());
  EXPECT_EQ(t.crossing_count(), 0);
  EXPECT_EQ(t.max_id(), 0);
}

TEST(GaussCode, ValidateRejectsUnpairedCrossing) {
  GaussCode c(2);
  c.strand(1) = {{1, Role::over, 1}};
  const auto r = validate(c);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].kind, Violation::Kind::occurrence_count);
  EXPECT_THROW(require_valid(c), DiagramError);
}

TEST(GaussCode, ValidateRejectsTwoOvers) {
  GaussCode c(2);
  c.strand(1) = {{1, Role::over, 1}};
  c.strand(2) = {{1, Role::over, 1}};
  EXPECT_EQ(validate(c).violations.at(0).kind, Violation::Kind::role_pairing);
}

TEST(GaussCode, ValidateRejectsSignMismatch) {
  GaussCode c(2);
  c.strand(1) = {{1, Role::over, 1}};
  c.strand(2) = {{1, Role::under, -1}};
  EXPECT_EQ(validate(c).violations.at(0).kind, Violation::Kind::sign_mismatch);
}

TEST(GaussCode, ValidateRejectsStrandCountMismatch) {
  GaussCode c(2, {{}});
  EXPECT_EQ(validate(c).violations.at(0).kind, Violation::Kind::strand_count);
}

TEST(GaussCode, StackShiftsIds) {
  const auto ft = fixtures::full_twist();
  const auto s = stack(ft, ft);
  EXPECT_TRUE(validate(s).ok());
  EXPECT_EQ(s.crossing_count(), 4);
  EXPECT_EQ(s.strand(1)[2].id, 3);
}

TEST(GaussCode, StackIsAssociative) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_code(rng, 3, 3), b = random_code(rng, 3, 4), c = random_code(rng, 3, 2);
    EXPECT_EQ(canonical_relabel(stack(stack(a, b), c)).strands, canonical_relabel(stack(a, stack(b, c))).strands);
  }
}

TEST(GaussCode, TrivialIsStackUnit) {
  const auto ft = fixtures::full_twist();
  EXPECT_EQ(canonical_relabel(stack(GaussCode(2), ft)).strands, canonical_relabel(ft).strands);
  EXPECT_EQ(canonical_relabel(stack(ft, GaussCode(2))).strands, canonical_relabel(ft).strands);
}

TEST(GaussCode, CanonicalRelabelNumbersByFirstAppearance) {
  GaussCode c(2);
  c.strand(1) = {{9, Role::over, 1}, {4, Role::under, -1}};
  c.strand(2) = {{9, Role::under, 1}, {4, Role::over, -1}};
  const auto r = canonical_relabel(c);
  EXPECT_EQ(r.strand(1)[0].id, 1);
  EXPECT_EQ(r.strand(1)[1].id, 2);
}

TEST(GaussCode, R1InsertDeleteRoundTrip) {
  const auto ft = fixtures::full_twist();
  const auto k = reidemeister(ft, R1Insert{2, 1, -1, false});
  EXPECT_EQ(k.crossing_count(), 3);
  EXPECT_TRUE(validate(k).ok());
  EXPECT_EQ(reidemeister(k, R1Delete{3}).strands, ft.strands);
}

TEST(GaussCode, R1DeleteRejectsNonKink) {
  EXPECT_THROW(reidemeister(fixtures::full_twist(), R1Delete{1}), PatternError);
}

TEST(GaussCode, R2InsertDeleteRoundTrip) {
  const auto ft = fixtures::full_twist();
  const auto k = reidemeister(ft, R2Insert{{1, 0, 2, 2}, 1, false});
  EXPECT_EQ(k.crossing_count(), 4);
  EXPECT_TRUE(validate(k).ok());
  EXPECT_EQ(reidemeister(k, R2Delete{3, 4}).strands, ft.strands);
}

TEST(GaussCode, R2DeleteRejectsEqualSigns) {
  GaussCode c(2);
  c.strand(1) = {{1, Role::over, 1}, {2, Role::over, 1}};
  c.strand(2) = {{1, Role::under, 1}, {2, Role::under, 1}};
  EXPECT_THROW(reidemeister(c, R2Delete{1, 2}), PatternError);
}

TEST(GaussCode, R3MoveIsAnInvolutionAndPreservesInvariants) {
  const auto c = r3_configuration();
  const auto moved = reidemeister(c, R3Move{1, 2, 3});
  EXPECT_TRUE(validate(moved).ok());
  EXPECT_NE(moved.strands, c.strands);
  EXPECT_EQ(moved.strand(1)[0].id, 2);
  EXPECT_EQ(moved.strand(2)[0].id, 3);
  EXPECT_EQ(moved.strand(3)[0].id, 3);
  EXPECT_EQ(invariant_table(c, 4, false), invariant_table(moved, 4, false));
  EXPECT_EQ(reidemeister(moved, R3Move{1, 2, 3}).strands, c.strands);
}

TEST(GaussCode, R3RejectsWrongSigns) {
  auto c = r3_configuration();
  c.strand(1)[0].sign = -1;
  c.strand(2)[0].sign = -1;
  EXPECT_THROW(reidemeister(c, R3Move{1, 2, 3}), PatternError);
}

TEST(GaussCode, OCSwapExchangesAdjacentOvers) {
  const auto c = r3_configuration();
  const auto s = reidemeister(c, OCSwap{1, 0});
  EXPECT_EQ(s.strand(1)[0].id, 2);
  EXPECT_EQ(invariant_table(c, 4, false), invariant_table(s, 4, false));
  EXPECT_THROW(reidemeister(c, OCSwap{3, 0}), PatternError);
}

TEST(GaussCode, FindSitesAreApplicable) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto c = scramble(random_code(rng, 3, 5), 10, static_cast<std::uint64_t>(t));
    for (const auto& r : find_sites(c)) EXPECT_NO_THROW(reidemeister(c, r));
  }
}

TEST(GaussCode, ScrambleIsDeterministic) {
  std::mt19937_64 rng(3);
  const auto c = random_code(rng, 3, 6);
  EXPECT_EQ(scramble(c, 25, 99).strands, scramble(c, 25, 99).strands);
}

TEST(GaussCode, RandomWelledRewritesPreserveInvariants) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 15; ++t) {
    const auto c = random_code(rng, 3, 6);
    const auto s = scramble(c, 30, static_cast<std::uint64_t>(t));
    EXPECT_TRUE(validate(s).ok());
    EXPECT_EQ(invariant_table(c, 4, false), invariant_table(s, 4, false));
  }
}

TEST(GaussCode, InsertBlocksOnSharedGapPutsBlockAFirst) {
  const Strand a{{5, Role::over, 1}}, b{{5, Role::under, 1}};
  const auto c = insert_blocks(GaussCode(1), {1, 0, 1, 0}, a, b);
  EXPECT_EQ(c.strand(1)[0].role, Role::over);
  EXPECT_EQ(c.strand(1)[1].role, Role::under);
}

TEST(GaussCode, SiteOutOfRangeThrows) {
  EXPECT_THROW(reidemeister(GaussCode(2), R1Insert{1, 3, 1, true}), DiagramError);
  EXPECT_THROW(reidemeister(GaussCode(2), R1Insert{4, 0, 1, true}), DiagramError);
}
