// Copyright 2026 The symgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "symgames/analytic.h"
#include "symgames/gadgets.h"
#include "symgames/geometry.h"

namespace symgames {
namespace {

BimatrixGame MatchingPennies() {
  const RationalMatrix r{{1, -1}, {-1, 1}};
  return BimatrixGame(r, -r);
}

TEST(MixedStrategyTest, ClampsTinyNegativesAndRejectsOthers) {
  const MixedStrategy s({0.5 + 5e-13, 0.5, -5e-13});
  EXPECT_EQ(s[2], 0.0);
  EXPECT_NEAR(s[0] + s[1], 1.0, 1e-15);
  EXPECT_THROW(MixedStrategy({0.6, 0.6}), InvalidArgument);
  EXPECT_THROW(MixedStrategy({1.1, -0.1}), InvalidArgument);
}

TEST(ExactStrategyTest, RequiresExactSum) {
  EXPECT_NO_THROW(ExactStrategy({Fraction(1, 3), Fraction(2, 3)}));
  EXPECT_THROW(ExactStrategy({Fraction(1, 3), Fraction(1, 3)}),
               InvalidArgument);
  EXPECT_EQ(ExactStrategy::Uniform(4)[3], Fraction(1, 4));
}

TEST(EvaluateUtilityTest, MatchingPennies) {
  const auto game = MatchingPennies();
  const auto u = MixedStrategy::Uniform(2);
  const auto e1 = MixedStrategy::Pure(2, 0);
  EXPECT_DOUBLE_EQ(EvaluateUtility(game, {u, u}, 0), 0.0);
  EXPECT_DOUBLE_EQ(EvaluateUtility(game, {e1, e1}, 0), 1.0);
  EXPECT_DOUBLE_EQ(EvaluateUtility(game, {e1, e1}, 1), -1.0);
}

TEST(EvaluateUtilityTest, IrrationalGameCorner) {
  const auto game = IrrationalGame();
  const auto e1 = MixedStrategy::Pure(2, 0);
  EXPECT_DOUBLE_EQ(EvaluateUtility(game, {e1, e1, e1}, 2), 1.0);
}

TEST(EvaluateUtilityTest, ShapeMismatchIsADimensionError) {
  const auto game = MatchingPennies();
  EXPECT_THROW(EvaluateUtility(game, {MixedStrategy::Uniform(3),
                                      MixedStrategy::Uniform(2)}, 0),
               DimensionError);
  EXPECT_THROW(EvaluateUtility(game, {MixedStrategy::Uniform(2)}, 0),
               DimensionError);
}

TEST(RegretTest, MatchingPennies) {
  const auto game = MatchingPennies();
  const auto u = MixedStrategy::Uniform(2);
  const auto e1 = MixedStrategy::Pure(2, 0);
  EXPECT_DOUBLE_EQ(Regret(game, {u, u}, 0), 0.0);
  EXPECT_DOUBLE_EQ(Regret(game, {e1, e1}, 1), 2.0);
  EXPECT_EQ(ExactRegret(game, {ExactStrategy::Pure(2, 0),
                               ExactStrategy::Pure(2, 0)}, 1), 2);
}

TEST(RegretTest, MinimizersGainByLowering) {
  const RationalMatrix a{{1, 0}, {0, 1}};
  const BimatrixGame game(a, a, {Orientation::kMinimize,
                                 Orientation::kMinimize});
  const auto e1 = MixedStrategy::Pure(2, 0);
  EXPECT_DOUBLE_EQ(Regret(game, {e1, e1}, 0), 1.0);
  EXPECT_DOUBLE_EQ(Regret(game, {e1, MixedStrategy::Pure(2, 1)}, 0), 0.0);
}

TEST(RegretTest, TeamGadgetCanonicalNeMatchesExhaustiveScan) {
  const TeamGadget gadget(RationalMatrix{{-1, -2}, {-2, -1}}, Fraction(1, 20));
  const MixedProfile ne = ToMixed(CanonicalTeamNe(gadget));
  for (int p = 0; p < 3; ++p) {
    EXPECT_LE(Regret(gadget.game(), ne, p), 1e-9);
    EXPECT_LE(testing::BruteRegret(gadget.game(), ne, p), 1e-9);
  }
}

// Property: utilities agree with the pure-profile expectation on random
// polymatrix games, with and without a team partition.
TEST(PolymatrixGameTest, UtilityMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<int> counts{2, 3, 2};
    std::vector<PairwiseTerm> terms;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        terms.push_back({i, j,
                         testing::RandomMatrix(counts[i], counts[j], -5, 5, 3,
                                               rng)});
      }
    }
    std::optional<TeamPartition> teams;
    std::vector<Orientation> o(3, Orientation::kMaximize);
    if (trial % 2 == 1) {
      teams = TeamPartition{{0, 1}, {2}};
      o = {Orientation::kMinimize, Orientation::kMinimize,
           Orientation::kMaximize};
    }
    const PolymatrixGame game(counts, o, terms, teams);
    MixedProfile profile;
    for (int c : counts) profile.push_back(RandomSimplexPoint(c, rng));
    for (int p = 0; p < 3; ++p) {
      EXPECT_NEAR(EvaluateUtility(game, profile, p),
                  testing::BruteUtility(game, profile, p), 1e-12);
      EXPECT_NEAR(Regret(game, profile, p),
                  testing::BruteRegret(game, profile, p), 1e-12);
    }
  }
}

TEST(PolymatrixGameTest, TeamsMustBeConsistent) {
  const std::vector<PairwiseTerm> terms{{0, 1, RationalMatrix(2, 2)}};
  EXPECT_THROW(PolymatrixGame({2, 2}, {Orientation::kMaximize,
                                       Orientation::kMaximize},
                              terms, TeamPartition{{0}, {1}}),
               InvalidArgument);
  EXPECT_THROW(PolymatrixGame({2, 2}, {Orientation::kMaximize},
                              terms),
               DimensionError);
}

TEST(ExactUtilityTest, AgreesWithFloatingPoint) {
  std::mt19937_64 rng(3);
  const auto r = testing::RandomMatrix(3, 3, -9, 9, 7, rng);
  const auto game = BimatrixGame::Symmetric(r);
  const ExactProfile p{ExactStrategy({Fraction(1, 2), Fraction(1, 3),
                                      Fraction(1, 6)}),
                       ExactStrategy::Uniform(3)};
  for (int player = 0; player < 2; ++player) {
    EXPECT_NEAR(ToDouble(ExactUtility(game, p, player)),
                EvaluateUtility(game, ToMixed(p), player), 1e-12);
  }
}

TEST(DecomposeSymmetricSkewTest, Examples) {
  const RationalMatrix skew{{0, 1}, {-1, 0}};
  auto parts = DecomposeSymmetricSkew(skew);
  EXPECT_EQ(parts.symmetric, RationalMatrix(2, 2));
  EXPECT_EQ(parts.skew, skew);

  const RationalMatrix sym{{2, 5}, {5, 1}};
  parts = DecomposeSymmetricSkew(sym);
  EXPECT_EQ(parts.symmetric, sym);
  EXPECT_EQ(parts.skew, RationalMatrix(2, 2));

  parts = DecomposeSymmetricSkew(RationalMatrix{{1, 3}, {2, 4}});
  EXPECT_EQ(parts.symmetric,
            (RationalMatrix{{1, Fraction(5, 2)}, {Fraction(5, 2), 4}}));
  EXPECT_EQ(parts.skew,
            (RationalMatrix{{0, Fraction(1, 2)}, {Fraction(-1, 2), 0}}));
}

TEST(DecomposeSymmetricSkewTest, PartsRecombine) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = testing::RandomMatrix(4, 4, -10, 10, 3, rng);
    const auto parts = DecomposeSymmetricSkew(r);
    EXPECT_TRUE(IsSymmetric(parts.symmetric));
    EXPECT_TRUE(IsSkewSymmetric(parts.skew));
    EXPECT_EQ(parts.symmetric + parts.skew, r);
  }
}

TEST(ToNormalFormTest, SinglePairIsTheBimatrixGame) {
  const RationalMatrix m{{1, 2}, {3, 4}};
  const PolymatrixGame game({2, 2}, {Orientation::kMaximize,
                                     Orientation::kMaximize},
                            {{0, 1, m}});
  const NormalFormGame nf = ToNormalForm(game);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::vector<int> a{i, j};
      EXPECT_EQ(nf.Payoff(a, 0), m(i, j));
      EXPECT_EQ(nf.Payoff(a, 1), 0);
    }
  }
}

TEST(ToNormalFormTest, TeamGadgetExtents) {
  const TeamGadget gadget(RationalMatrix{{-1, -2}, {-2, -1}}, Fraction(1, 20));
  const NormalFormGame nf = ToNormalForm(gadget.game());
  EXPECT_EQ(nf.action_counts(), (std::vector<int>{2, 2, 5}));
  EXPECT_EQ(nf.num_pure_profiles(), 20);
  std::mt19937_64 rng(1);
  MixedProfile p;
  for (int c : nf.action_counts()) p.push_back(RandomSimplexPoint(c, rng));
  for (int player = 0; player < 3; ++player) {
    EXPECT_NEAR(EvaluateUtility(nf, p, player),
                EvaluateUtility(gadget.game(), p, player), 1e-12);
  }
}

TEST(ToNormalFormTest, ZeroGameAndCap) {
  const PolymatrixGame zero({2, 3}, {Orientation::kMaximize,
                                     Orientation::kMaximize},
                            {});
  const NormalFormGame nf = ToNormalForm(zero);
  for (int p = 0; p < 2; ++p) {
    for (const auto& v : nf.payoffs(p)) EXPECT_EQ(v, 0);
  }
  EXPECT_THROW(ToNormalForm(zero, 5), SizeError);
}

}  // namespace
}  // namespace symgames
