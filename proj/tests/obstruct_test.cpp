#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spineless/families.hpp"
#include "spineless/obstruct.hpp"
#include "spineless/surgery.hpp"

using namespace spineless;

namespace {

std::set<std::string> option_strs(long n, long i) {
  std::set<std::string> out;
  for (const auto& x : allowed_differences(n, i).options) out.insert(x.str());
  return out;
}

std::vector<std::string> strs(std::span<const Rational> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

TEST(AllowedDifferences, OrderFour) {
  EXPECT_EQ(option_strs(4, 0), (std::set<std::string>{"3/4", "-5/4"}));
  EXPECT_EQ(option_strs(4, 1), (std::set<std::string>{"1/4", "-7/4"}));
  EXPECT_EQ(option_strs(4, 2), (std::set<std::string>{"-1/4", "7/4"}));
  EXPECT_EQ(option_strs(4, 3), (std::set<std::string>{"-3/4", "5/4"}));
}

TEST(AllowedDifferences, OddMiddleAndOrderTwo) {
  EXPECT_EQ(option_strs(5, 2), (std::set<std::string>{"0"}));
  EXPECT_EQ(option_strs(2, 0), (std::set<std::string>{"1/2", "-3/2"}));
  EXPECT_EQ(option_strs(2, 1), (std::set<std::string>{"-1/2", "3/2"}));
  EXPECT_THROW(allowed_differences(1, 0), Inapplicable);
  EXPECT_THROW(allowed_differences(4, 4), InvalidInput);
}

TEST(AllowedDifferences, MatchesNiWuRouteOracle) {
  // Away from the wrap-around index, the allowed set is exactly what a
  // 0-or-1 V-step produces in the surgery formula.
  for (long n = 2; n <= 40; ++n)
    for (long i = 0; i + 1 < n; ++i) EXPECT_EQ(option_strs(n, i), oracle::niwu_route_diffs(n, i)) << n << "," << i;
}

TEST(AllowedDifferences, AbsoluteBound) {
  for (long n = 2; n <= 64; ++n)
    for (long i = 0; i < n; ++i)
      for (const auto& x : allowed_differences(n, i).options) EXPECT_LE(x.abs(), Rational(2 * n - 1, n));
}

TEST(CheckLabeled, Examples) {
  EXPECT_TRUE(check_labeled(lens_n1_profile(4)).pass);
  const LabelCheck fail = check_labeled(mp_profile({1, 0}));
  EXPECT_FALSE(fail.pass);
  EXPECT_EQ(fail.violations, (std::vector<long>{1, 2}));
  EXPECT_TRUE(check_labeled(mp_profile({-2, 0})).pass);
  EXPECT_THROW(check_labeled(lens_n1_profile(1)), Inapplicable);
}

TEST(CheckLabeled, NiWuProfilesAlwaysPass) {
  std::mt19937 rng(41);
  for (int k = 0; k < 300; ++k) {
    const VSequence v = v_from_values(oracle::random_v(rng, 8));
    for (long n = 2; n <= 12; ++n) EXPECT_TRUE(check_labeled(niwu_profile(v, n)).pass) << v.str() << " n=" << n;
  }
}

TEST(Labelings, QmMinusThree) {
  const auto pos = enumerate_labelings(qm_profile(-3), Sign::PositiveDefinite);
  ASSERT_EQ(pos.size(), 1u);
  EXPECT_EQ(strs(pos[0].values()), (std::vector<std::string>{"-5/4", "0", "-1/4", "0"}));
  EXPECT_TRUE(enumerate_labelings(qm_profile(-3), Sign::NegativeDefinite).empty());
}

TEST(Labelings, AllZeroOrderTwoIsExcluded) {
  const RawProfile raw({{"u", Rational(0)}, {"w", Rational(0)}}, {0, 1});
  EXPECT_TRUE(enumerate_labelings(raw, Sign::PositiveDefinite).empty());
}

TEST(Labelings, CyclicProfileOnlyAffine) {
  // from_labeled(L(5,1)): the affine relabellings i -> r0 + g i that respect
  // residues and conjugation are r0 = 0, g = +-1, giving the same vector.
  const auto out = enumerate_labelings(RawProfile::from_labeled(lens_n1_profile(5)), Sign::PositiveDefinite);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], lens_n1_profile(5));
}

TEST(Labelings, EveryResultRespectsResiduesAndConjugation) {
  for (long m = -15; m <= 15; ++m)
    for (Sign s : {Sign::PositiveDefinite, Sign::NegativeDefinite})
      for (const auto& p : enumerate_labelings(qm_profile(m), s))
        for (long i = 0; i < 4; ++i) {
          EXPECT_EQ(mod2(p[i]), residue(4, i));
          EXPECT_EQ(p[i], p[4 - i]);
        }
}

TEST(Verdict, Examples) {
  EXPECT_EQ(verdict(mp_profile({1, 0})).overall, Overall::Obstructed);
  EXPECT_EQ(verdict(mp_profile({-1, 0})).overall, Overall::NotObstructed);
  for (long n = 2; n <= 9; ++n) EXPECT_EQ(verdict(lens_n1_profile(n)).overall, Overall::NotObstructed) << n;
  EXPECT_EQ(verdict(lens_n1_profile(1)).overall, Overall::Inapplicable);
}

TEST(Verdict, ScanOverP) {
  for (long p = -10; p <= 10; ++p) {
    const Overall base = verdict(mp_profile({p, 0})).overall;
    const bool survives = p == -2 || p == -1 || p == 0;
    EXPECT_EQ(base, survives ? Overall::NotObstructed : Overall::Obstructed) << p;
    for (long dy : {-4L, -2L, 2L, 4L}) EXPECT_EQ(verdict(mp_profile({p, dy})).overall, base);
  }
}

TEST(Verdict, NegativeBranchIsCongruenceExcludedForMp) {
  for (long p = -10; p <= 10; ++p) {
    const SpineVerdict v = verdict(mp_profile({p, 0}));
    ASSERT_EQ(v.branches.size(), 2u);
    EXPECT_EQ(v.branches[0].sign, Sign::PositiveDefinite);
    EXPECT_TRUE(v.branches[1].congruence_excluded()) << p;
  }
}

TEST(Verdict, UnlabelledQmUsesFullSearch) {
  // Q_m with m = -4p-3 carries the same values as M_p; the raw search over
  // conjugation-compatible bijections must agree with the labelled scan.
  for (long p = -10; p <= 10; ++p) {
    const bool survives = p == -2 || p == -1 || p == 0;
    EXPECT_EQ(verdict(qm_profile(-4 * p - 3)).overall, survives ? Overall::NotObstructed : Overall::Obstructed) << p;
  }
}
