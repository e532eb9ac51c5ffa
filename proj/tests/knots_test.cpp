#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spineless/errors.hpp"
#include "spineless/knots.hpp"

using namespace spineless;

TEST(VSequence, UnknotIsZero) {
  const VSequence u = v_unknot();
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(v_at(u, i), 0);
  EXPECT_EQ(u.str(), "0");
}

TEST(VSequence, Trefoil) {
  const VSequence t = v_trefoil();
  EXPECT_EQ(v_at(t, 0), 1);
  EXPECT_EQ(v_at(t, 1), 0);
  EXPECT_EQ(v_at(t, 1000), 0);
  EXPECT_EQ(t.str(), "1,0");
}

TEST(VSequence, TrimsTrailingZeros) {
  const VSequence v = VSequence::from_values({2, 1, 1, 0, 0, 0});
  EXPECT_EQ(v.str(), "2,1,1,0");
  EXPECT_EQ(v.stored().size(), 4u);
}

TEST(VSequence, RejectsRise) {
  try {
    VSequence::from_values({1, 2, 0});
    FAIL() << "expected MonotonicityViolation";
  } catch (const MonotonicityViolation& e) {
    EXPECT_EQ(e.index(), 0u);  // between V_0 and V_1
  }
}

TEST(VSequence, RejectsLargeDrops) {
  EXPECT_THROW(VSequence::from_values({2, 0}), MonotonicityViolation);
  EXPECT_THROW(VSequence::from_values({0, 1}), MonotonicityViolation);
  EXPECT_THROW(VSequence::from_values({3, 1, 0}), MonotonicityViolation);
  // The implicit tail is zero, so a trailing 2 drops by 2.
  EXPECT_THROW(VSequence::from_values({2}), MonotonicityViolation);
  EXPECT_THROW(VSequence::from_values({-1}), InvalidInput);
}

TEST(VSequence, RandomValidSequencesRoundTrip) {
  std::mt19937 rng(3);
  for (int k = 0; k < 500; ++k) {
    const auto values = oracle::random_v(rng, 8);
    const VSequence v = v_from_values(values);
    for (std::size_t i = 0; i < values.size() + 5; ++i)
      EXPECT_EQ(v_at(v, i), i < values.size() ? values[i] : 0);
    for (std::size_t i = 0; i + 1 < 20; ++i) {
      EXPECT_GE(v_at(v, i), v_at(v, i + 1));
      EXPECT_LE(v_at(v, i) - v_at(v, i + 1), 1);
    }
  }
}

TEST(ExperimentalTorus, GenusOneIsTrefoil) {
  EXPECT_EQ(experimental::v_torus_two_strand(1).str(), v_trefoil().str());
  EXPECT_EQ(experimental::v_torus_two_strand(0).str(), v_unknot().str());
}

TEST(ExperimentalTorus, CeilingForm) {
  for (long g = 0; g <= 12; ++g) {
    const VSequence v = experimental::v_torus_two_strand(g);
    for (long i = 0; i <= g + 4; ++i) {
      const long gap = std::max(g - i, 0L);
      EXPECT_EQ(v_at(v, static_cast<std::size_t>(i)), (gap + 1) / 2) << g << "," << i;
    }
  }
  EXPECT_THROW(experimental::v_torus_two_strand(-1), InvalidInput);
}
