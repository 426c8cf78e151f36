#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wmilnor;

TEST(Classify, CountingFormulas) {
  EXPECT_EQ(count_sm(1), 0);
  EXPECT_EQ(count_sm(2), 1);
  EXPECT_EQ(count_sm(3), 4);
  EXPECT_EQ(count_sm(4), 12);
  EXPECT_EQ(count_wm(2), 2);
  EXPECT_EQ(count_wm(3), 9);
  EXPECT_EQ(count_wm(4), 32);
  EXPECT_EQ(order_Vn_group(2, 3), 9);
  EXPECT_EQ(order_Vn_group(3, 2), 512);
  EXPECT_THROW(count_wm(0), std::invalid_argument);
  EXPECT_THROW(order_Vn_group(2, 0), std::invalid_argument);
}

TEST(Classify, SvSeparatesAndIdentifies) {
  const auto w = generator(2, {2}, 1);
  EXPECT_TRUE(equivalent_sv(w, w));
  EXPECT_FALSE(equivalent_sv(w, GaussCode(2)));
  EXPECT_TRUE(equivalent_sv(scramble(w, 20, 4), w));
  EXPECT_THROW(equivalent_sv(w, GaussCode(3)), DiagramError);
  EXPECT_TRUE(equivalent_sv(GaussCode(1), GaussCode(1)));
}

TEST(Classify, TwoNFinerThanVn) {
  const auto sq = generator_power(2, {2}, 1, 2);
  EXPECT_TRUE(equivalent_Vn_sv(sq, GaussCode(2), 2));
  EXPECT_FALSE(equivalent_2n_sv(sq, GaussCode(2), 2));
  EXPECT_TRUE(equivalent_2n_sv(fixtures::full_twist(), GaussCode(2), 1));
}

TEST(Classify, TwoNMoveGivesEquivalentPair) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 15; ++t) {
    const int n = 2 + t % 2;
    const auto c = random_code(rng, 3, 6);
    const auto moved = insert_2n(c, random_site(rng, c, true), n, t % 3 ? 1 : -1);
    EXPECT_TRUE(equivalent_2n_sv(c, moved, n));
    EXPECT_TRUE(equivalent_Vn_sv(c, moved, n));
  }
}

TEST(Classify, TwoNImpliesVnOnRandomPairs) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 40; ++t) {
    const auto a = random_code(rng, 2, 4), b = random_code(rng, 2, 4);
    if (equivalent_2n_sv(a, b, 2)) EXPECT_TRUE(equivalent_Vn_sv(a, b, 2));
  }
}

TEST(Classify, EnumerationOrderAndBudget) {
  const auto reps = enumerate_representatives(2, 2);
  ASSERT_EQ(reps.size(), 4u);
  EXPECT_EQ(reps[0].code.crossing_count(), 0);
  EXPECT_EQ(reps[1].y[1].exponent, 1);
  EXPECT_THROW(enumerate_representatives(3, 2, 100), std::length_error);
}

TEST(Classify, FingerprintReports) {
  const auto r = fingerprint_report(2, 2);
  EXPECT_EQ(r.classes, 4u);
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.tsv.rfind("classes=4 expected=4\n"), r.tsv.size() - 21);
  EXPECT_EQ(r.tsv.substr(0, 24), "y_table\tfingerprint_hash");
  EXPECT_TRUE(fingerprint_report(2, 3).complete());
}

TEST(Classify, FingerprintHashIsStable) {
  const auto h = fingerprint_hash(fingerprint(GaussCode(2), 2));
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h, fingerprint_hash(fingerprint(scramble(GaussCode(2), 15, 1), 2)));
}
