#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spineless/families.hpp"
#include "spineless/surgery.hpp"

using namespace spineless;

namespace {

std::vector<std::string> strs(std::span<const Rational> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

TEST(NiWu, TrefoilFour) {
  const DProfile p = niwu_profile(v_trefoil(), 4);
  EXPECT_EQ(strs(p.values()), (std::vector<std::string>{"-5/4", "0", "-1/4", "0"}));
}

TEST(NiWu, UnknotFiveIsLens) {
  const DProfile p = niwu_profile(v_unknot(), 5);
  EXPECT_EQ(strs(p.values()), (std::vector<std::string>{"1", "1/5", "-1/5", "-1/5", "1/5"}));
  EXPECT_EQ(p, lens_n1_profile(5));
}

TEST(NiWu, TrefoilFive) {
  const DProfile p = niwu_profile(v_from_values(std::vector<long>{1, 0}), 5);
  EXPECT_EQ(strs(p.values()), (std::vector<std::string>{"-1", "1/5", "-1/5", "-1/5", "1/5"}));
}

TEST(NiWu, OrderOneReadsVOne) {
  // i = 0, n = 1: max(V_0, V_1).
  EXPECT_EQ(niwu_profile(v_from_values(std::vector<long>{2, 1, 0}), 1)[0], Rational(-4));
  EXPECT_THROW(niwu_profile(v_unknot(), 0), InvalidInput);
}

TEST(NiWu, MatchesDirectEvaluationOracle) {
  std::mt19937 rng(5);
  for (int k = 0; k < 400; ++k) {
    const auto values = oracle::random_v(rng, 8);
    const long n = 1 + k % 16;
    const DProfile p = niwu_profile(v_from_values(values), n);
    const auto expect = oracle::niwu(values, n);
    for (long i = 0; i < n; ++i) EXPECT_EQ(p[i].str(), expect[static_cast<std::size_t>(i)].str());
  }
}

TEST(NiWu, ResiduesAndSymmetryProperty) {
  std::mt19937 rng(17);
  for (int k = 0; k < 400; ++k) {
    const long n = 1 + k % 16;
    const DProfile p = niwu_profile(v_from_values(oracle::random_v(rng, 8)), n);
    const auto table = residue_table(n);
    for (long i = 0; i < n; ++i) {
      EXPECT_EQ(mod2(p[i]), table[static_cast<std::size_t>(i)]);
      EXPECT_EQ(p[i], p[n - i]);
    }
  }
}

TEST(NiWu, ConsecutiveDifferenceLaw) {
  std::mt19937 rng(23);
  for (int k = 0; k < 400; ++k) {
    const long n = 2 + k % 15;
    const VSequence v = v_from_values(oracle::random_v(rng, 8));
    const DProfile p = niwu_profile(v, n);
    for (long i = 0; 2 * i <= n - 2; ++i) {
      const Rational diff = p[i] - p[i + 1];
      EXPECT_TRUE(diff == Rational(n - 2 * i - 1, n) || diff == Rational(-n - 2 * i - 1, n))
          << "n=" << n << " i=" << i << " diff=" << diff;
    }
    if (n % 2 == 1) {
      const long mid = (n - 1) / 2;
      EXPECT_EQ(p[mid], p[mid + 1]);
      EXPECT_EQ(p[mid], Rational(1 - n, 4 * n) - Rational(2 * v_at(v, static_cast<std::size_t>(mid))));
    }
  }
}

TEST(BoundCheck, Examples) {
  SurgeryBoundInput in{Rational(0), 0, v_trefoil(), 4, 0};
  EXPECT_TRUE(niwu_bound_check(in, Rational(-5, 4)));
  EXPECT_FALSE(niwu_bound_check(in, Rational(-1, 4)));
  in.NY = 1;
  EXPECT_TRUE(niwu_bound_check(in, Rational(-13, 4)));
  EXPECT_EQ(niwu_deficit(in, Rational(-13, 4)), Rational(-2));
  EXPECT_FALSE(niwu_bound_check(in, Rational(-21, 4)));
  EXPECT_FALSE(niwu_bound_check(in, Rational(-1, 4)));
}

TEST(BoundCheck, RejectsInvalidInput) {
  EXPECT_THROW(niwu_bound_check({Rational(0), -1, v_unknot(), 4, 0}, Rational(0)), InvalidInput);
  EXPECT_THROW(niwu_bound_check({Rational(0), 0, v_unknot(), 4, 4}, Rational(0)), InvalidInput);
  EXPECT_THROW(niwu_bound_check({Rational(0), 0, v_unknot(), 0, 0}, Rational(0)), InvalidInput);
}

TEST(BoundCheck, ZeroExponentAcceptsExactlyNiWu) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> jitter(-8, 8);
  for (int k = 0; k < 300; ++k) {
    const long n = 1 + k % 16;
    const VSequence v = v_from_values(oracle::random_v(rng, 6));
    const DProfile p = niwu_profile(v, n);
    const long i = k % n;
    const SurgeryBoundInput in{Rational(0), 0, v, n, i};
    EXPECT_TRUE(niwu_bound_check(in, p[i]));
    const long off = jitter(rng);
    if (off != 0) {
      EXPECT_FALSE(niwu_bound_check(in, p[i] + Rational(off, 4)));
    }
  }
}
