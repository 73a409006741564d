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
#include "symgames/minmax.h"

namespace symgames {
namespace {

const RationalMatrix kRps{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};

QuadraticMinMaxProblem Zero(int n) {
  return QuadraticMinMaxProblem(RationalMatrix(n, n), RationalMatrix(n, n),
                                RationalMatrix(n, n), SimplexProduct{n, n});
}

QuadraticMinMaxProblem Rps() {
  return QuadraticMinMaxProblem(RationalMatrix(3, 3), RationalMatrix(3, 3),
                                kRps, SimplexProduct{3, 3});
}

TEST(QuadraticProblemTest, Validation) {
  EXPECT_THROW(QuadraticMinMaxProblem(kRps, RationalMatrix(3, 3),
                                      RationalMatrix(3, 3),
                                      SimplexProduct{3, 3}),
               InvalidArgument);
  EXPECT_THROW(QuadraticMinMaxProblem(RationalMatrix(3, 3),
                                      RationalMatrix(2, 2),
                                      RationalMatrix(3, 3),
                                      SimplexProduct{3, 2}),
               DimensionError);
  EXPECT_THROW(QuadraticMinMaxProblem(RationalMatrix(3, 3),
                                      RationalMatrix(3, 3),
                                      RationalMatrix(3, 3),
                                      SimplexProduct{3, 2}),
               DimensionError);
}

TEST(GradientTest, ZeroAndRps) {
  const auto u = MixedStrategy::Uniform(3);
  for (const auto& problem : {Zero(3), Rps()}) {
    const Gradient g = problem.Grad(u.probs(), u.probs());
    for (double v : g.x) EXPECT_EQ(v, 0.0);
    for (double v : g.y) EXPECT_EQ(v, 0.0);
  }
}

TEST(GradientTest, MatchesCentralDifferences) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto qx = testing::RandomSymmetricMatrix(3, -5, 5, 4, rng);
    const auto qy = testing::RandomSymmetricMatrix(3, -5, 5, 4, rng);
    const auto m = testing::RandomMatrix(3, 3, -5, 5, 4, rng);
    const QuadraticMinMaxProblem problem(qx, qy, m, SimplexProduct{3, 3});
    const MixedStrategy x = RandomSimplexPoint(3, rng);
    const MixedStrategy y = RandomSimplexPoint(3, rng);
    const Gradient g = problem.Grad(x.probs(), y.probs());
    const auto fx = testing::CentralDifference(
        [&](const std::vector<double>& v) { return problem.Value(v, y.probs()); },
        x.values());
    const auto fy = testing::CentralDifference(
        [&](const std::vector<double>& v) { return problem.Value(x.probs(), v); },
        y.values());
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(g.x[i], fx[i], 1e-6);
      EXPECT_NEAR(g.y[i], fy[i], 1e-6);
    }
  }
}

TEST(GdaMapTest, ZeroProblemIsIdentity) {
  std::mt19937_64 rng(1);
  const MixedStrategy x = RandomSimplexPoint(3, rng);
  const MixedStrategy y = RandomSimplexPoint(3, rng);
  const MinMaxPoint p = GdaMap(Zero(3), x, y);
  EXPECT_EQ(p.x, x);
  EXPECT_EQ(p.y, y);
}

TEST(GdaMapTest, RpsAtUniformIsFixed) {
  const auto u = MixedStrategy::Uniform(3);
  const MinMaxPoint p = GdaMap(Rps(), u, u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(p.x[i], 1.0 / 3, 1e-15);
    EXPECT_NEAR(p.y[i], 1.0 / 3, 1e-15);
  }
}

TEST(GdaMapTest, RpsFromVertexMatchesComposedProjections) {
  const auto e1 = MixedStrategy::Pure(3, 0);
  const auto problem = Rps();
  const Gradient g = problem.Grad(e1.probs(), e1.probs());
  std::vector<double> ux(3), uy(3);
  for (int i = 0; i < 3; ++i) {
    ux[i] = e1[i] - g.x[i];
    uy[i] = e1[i] + g.y[i];
  }
  const auto ex = testing::BisectionProjection(ux);
  const auto ey = testing::BisectionProjection(uy);
  const MinMaxPoint p = GdaMap(problem, e1, e1, 1.0);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(p.x[i], ex[i], 1e-12);
    EXPECT_NEAR(p.y[i], ey[i], 1e-12);
  }
  // Regression fixture: both players split evenly between actions 1 and 2.
  for (const auto* s : {&p.x, &p.y}) {
    EXPECT_NEAR((*s)[0], 0.5, 1e-15);
    EXPECT_NEAR((*s)[1], 0.5, 1e-15);
    EXPECT_EQ((*s)[2], 0.0);
  }
}

TEST(GdaMapTest, RejectsBadInput) {
  const auto u = MixedStrategy::Uniform(3);
  EXPECT_THROW(GdaMap(Rps(), u, u, 0.0), InvalidArgument);
  EXPECT_THROW(GdaMap(Rps(), MixedStrategy::Uniform(2), u), DimensionError);
}

TEST(GdaGapTest, FixedPointsHaveZeroGap) {
  const auto u = MixedStrategy::Uniform(3);
  EXPECT_EQ(GdaGap(Zero(3), u, u).gap, 0.0);
  const GapReport r = GdaGap(Rps(), u, u);
  EXPECT_NEAR(r.gap, 0.0, 1e-15);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.bound_name, "gradient-mapping-gap-to-vi");
  EXPECT_FALSE(GdaGap(Rps(), u, u, 0.5).certified);
}

TEST(GdaGapTest, JointDomainUsesTheSafeBound) {
  const QuadraticMinMaxProblem problem(RationalMatrix(2, 2),
                                       RationalMatrix(2, 2),
                                       RationalMatrix{{0, 1}, {-1, 0}},
                                       JointDomain(2, 0.5));
  const auto u = MixedStrategy::Uniform(2);
  const GapReport r = GdaGap(problem, u, u);
  EXPECT_EQ(r.bound_name, "safe-gda-gap-to-vi");
  EXPECT_THROW(GdaGap(problem, MixedStrategy::Pure(2, 0),
                      MixedStrategy::Pure(2, 1)),
               PreconditionError);
}

TEST(CheckFoneTest, SaddleAndZero) {
  const auto u = MixedStrategy::Uniform(3);
  const FoneResiduals r = CheckFone(Rps(), u, u);
  EXPECT_NEAR(r.x, 0.0, 1e-15);
  EXPECT_NEAR(r.y, 0.0, 1e-15);
  std::mt19937_64 rng(3);
  const FoneResiduals z = CheckFone(Zero(3), RandomSimplexPoint(3, rng),
                                    RandomSimplexPoint(3, rng));
  EXPECT_EQ(z.max(), 0.0);
}

TEST(CheckFoneTest, JointDomainIsUnsupported) {
  const QuadraticMinMaxProblem problem(RationalMatrix(2, 2),
                                       RationalMatrix(2, 2),
                                       RationalMatrix(2, 2),
                                       JointDomain(2, 1.0));
  const auto u = MixedStrategy::Uniform(2);
  EXPECT_THROW(CheckFone(problem, u, u), UnsupportedDomain);
}

TEST(CheckFoneTest, PureStrategyResiduals) {
  // At (e1, e1) on RPS: ∇ₓf = Mᵀe₁ = (0, −1, 1), so x could gain 1 by
  // moving to action 2; ∇ᵧf = Me₁ = (0, 1, −1), so y gains 1 as well.
  const auto e1 = MixedStrategy::Pure(3, 0);
  const FoneResiduals r = CheckFone(Rps(), e1, e1);
  EXPECT_DOUBLE_EQ(r.x, 1.0);
  EXPECT_DOUBLE_EQ(r.y, 1.0);
}

TEST(BoundTest, GradientMapping) {
  EXPECT_EQ(GapToViBound(0.0, 12.0), 0.0);
  EXPECT_NEAR(GapToViBound(0.01, 12.0), 0.13, 1e-15);
  EXPECT_EQ(GapToViBound(1.0, 0.0), 1.0);
  EXPECT_THROW(GapToViBound(-1.0, 1.0), InvalidArgument);
}

TEST(BoundTest, SafeGda) {
  EXPECT_EQ(SafeGapToViBound(0.0, 8, 8), 0.0);
  // K evaluated independently: 9·√(8 + 4√2).
  const double k = 9.0 * std::sqrt(8.0 + 4.0 * std::sqrt(2.0));
  EXPECT_NEAR(SafeGapConstant(8, 8), k, 1e-12);
  EXPECT_NEAR(SafeGapToViBound(1e-4, 8, 8), 0.3326, 5e-5);
  EXPECT_NEAR(SafeGapToViBound(1.0, 0, 0), 2.3784, 5e-5);
}

TEST(SpectralNormTest, KnownValues) {
  EXPECT_NEAR(SpectralNorm(RealMatrix{{3, 0}, {0, -4}}), 4.0, 1e-12);
  EXPECT_NEAR(SpectralNorm(ToReal(kRps)), std::sqrt(3.0), 1e-12);
  EXPECT_EQ(SpectralNorm(RealMatrix(0, 0)), 0.0);
}

TEST(AntisymmetryCheckTest, Examples) {
  EXPECT_TRUE(AntisymmetryCheck(Zero(3), 50));
  EXPECT_TRUE(AntisymmetryCheck(Rps(), 50));
  const QuadraticMinMaxProblem lopsided(RationalMatrix::Identity(2),
                                        RationalMatrix(2, 2),
                                        RationalMatrix(2, 2),
                                        SimplexProduct{2, 2});
  EXPECT_FALSE(AntisymmetryCheck(lopsided, 50));
}

}  // namespace
}  // namespace symgames
