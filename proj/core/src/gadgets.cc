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

#include "symgames/gadgets.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "symgames/checks.h"
#include "symgames/errors.h"
#include "symgames/oracle.h"

namespace symgames {
namespace {

// Tolerance on the structure lemmas and on cross-team symmetry.
constexpr double kAuditSlack = 1e-9;

void CheckEpsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > Fraction(1, 10)) {
    throw InvalidArgument("gadget epsilon must lie in (0, 1/10]");
  }
}

void CheckPenaltyMatrix(const RationalMatrix& a) {
  if (!a.square() || a.rows() == 0) {
    throw DimensionError("gadget matrix must be square and nonempty");
  }
  if (!IsSymmetric(a)) throw InvalidArgument("gadget matrix is not symmetric");
  if (MaxEntry(a) > -1) {
    throw InvalidArgument("gadget matrix has entries above -1; shift it first");
  }
}

// The pair of matrices realizing δ(x, y, z) = s Σᵢ (zᵢ(xᵢ − yᵢ) +
// z_{n+i}(yᵢ − xᵢ)) + z_{2n+1}|A_min| as ⟨z, Zx x⟩ + ⟨z, Zy y⟩; the last row
// of Zx pays |A_min| on every action since Σx = 1.
std::pair<RationalMatrix, RationalMatrix> CouplingMatrices(
    int n, const Rational& scale, const Rational& abs_min) {
  RationalMatrix zx(2 * n + 1, n);
  RationalMatrix zy(2 * n + 1, n);
  for (int i = 0; i < n; ++i) {
    zx(i, i) = scale;
    zx(n + i, i) = -scale;
    zy(i, i) = -scale;
    zy(n + i, i) = scale;
    zx(2 * n, i) = abs_min;
  }
  return {std::move(zx), std::move(zy)};
}

double MaxAbs(const RationalMatrix& m) {
  Rational best = 0;
  for (const Rational& v : m.data()) best = std::max(best, Rational(abs(v)));
  return ToDouble(best);
}

void CheckUnitRange(const RationalMatrix& r) {
  if (!r.square() || r.rows() == 0) {
    throw DimensionError("source matrix must be square and nonempty");
  }
  for (const Rational& v : r.data()) {
    if (v < -1 || v > 1) {
      throw InvalidArgument("source matrix entries must lie in [-1, 1]");
    }
  }
}

double MaxZMass(const MixedStrategy& z, int n) {
  double worst = 0.0;
  for (int j = 0; j < 2 * n; ++j) worst = std::max(worst, z[j]);
  return worst;
}

void RequireCertified(const Game& game, const MixedProfile& profile,
                      double eps2) {
  const Certificate cert =
      EpsilonNeReport(game, profile, eps2, "epsilon-squared-ne");
  if (!cert.satisfied) {
    throw PreconditionError("profile is not a certified eps^2-NE (max regret " +
                            std::to_string(cert.max_regret()) + ")");
  }
}

Rational CheckedPenaltyScale(const RationalMatrix& a, const Rational& epsilon) {
  CheckPenaltyMatrix(a);
  CheckEpsilon(epsilon);
  return abs(MinEntry(a));
}

PolymatrixGame MakeTeamGame(const RationalMatrix& a, const Rational& scale,
                            const Rational& abs_min) {
  const int n = a.rows();
  auto [zx, zy] = CouplingMatrices(n, scale, abs_min);
  return PolymatrixGame(
      {n, n, 2 * n + 1},
      {Orientation::kMinimize, Orientation::kMinimize, Orientation::kMaximize},
      {{0, 1, a}, {2, 0, std::move(zx)}, {2, 1, std::move(zy)}},
      TeamPartition{{0, 1}, {2}});
}

PolymatrixGame MakeTeam3v3Game(const RationalMatrix& a, const RationalMatrix& c,
                               const Rational& scale, const Rational& abs_min) {
  const int n = a.rows();
  auto [zx, zy] = CouplingMatrices(n, scale, abs_min);
  const auto kMin = Orientation::kMinimize;
  const auto kMax = Orientation::kMaximize;
  return PolymatrixGame({n, n, 2 * n + 1, n, n, 2 * n + 1},
                        {kMin, kMin, kMin, kMax, kMax, kMax},
                        {{0, 1, a},
                         {3, 4, -a},
                         {0, 3, c},
                         {5, 0, zx},
                         {5, 1, zy},
                         {2, 3, -zx},
                         {2, 4, -zy}},
                        TeamPartition{{0, 1, 2}, {3, 4, 5}});
}

ShiftedMatrix CheckedSymmetricPart(const RationalMatrix& r,
                                   const Rational& epsilon) {
  if (!r.square() || r.rows() == 0) {
    throw DimensionError("source matrix must be square and nonempty");
  }
  CheckEpsilon(epsilon);
  return ShiftBelowMinusOne(Fraction(-1, 2) * (r + r.Transposed()));
}

}  // namespace

ShiftedMatrix ShiftBelowMinusOne(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("empty matrix");
  Rational shift = -(MaxEntry(a) + 2);
  return {Shifted(a, shift), std::move(shift)};
}

TeamGadget::TeamGadget(RationalMatrix a, Rational epsilon, Rational shift)
    : a_(std::move(a)), epsilon_(std::move(epsilon)), shift_(std::move(shift)),
      abs_min_(CheckedPenaltyScale(a_, epsilon_)),
      range_(2.0 * ToDouble(abs_min_) + ToDouble(abs_min_ / epsilon_)),
      game_(MakeTeamGame(a_, abs_min_ / epsilon_, abs_min_)) {}

ExactProfile CanonicalTeamNe(const TeamGadget& gadget) {
  const SymmetricEnumeration found =
      SymmetricSupportEnumeration(gadget.matrix(), Orientation::kMinimize);
  if (found.equilibria.empty()) {
    throw Error("no exact symmetric equilibrium of (A, A) found");
  }
  const ExactStrategy& bar = found.equilibria.front().strategy;
  const int n = gadget.n();
  return {bar, bar, ExactStrategy::Pure(2 * n + 1, 2 * n)};
}

BackmapResult TeamBackmap(const TeamGadget& gadget, const MixedProfile& profile,
                          double eps2_certified) {
  const double eps = ToDouble(gadget.epsilon());
  if (eps2_certified < 0 || eps2_certified > eps * eps * (1 + 1e-12)) {
    throw PreconditionError("certificate level must not exceed eps^2");
  }
  RequireCertified(gadget.game(), profile, eps2_certified);
  const int n = gadget.n();
  return {profile[1], (21.0 * n + 1) * ToDouble(gadget.penalty_scale()) * eps,
          "team-backmap-(21n+1)|Amin|eps"};
}

StructureAudit GadgetStructureAudit(const TeamGadget& gadget,
                                    const MixedProfile& profile) {
  const double eps = ToDouble(gadget.epsilon());
  RequireCertified(gadget.game(), profile, eps * eps);
  StructureAudit audit;
  audit.max_xy_gap = LinfDistance(profile[0].probs(), profile[1].probs());
  audit.max_z_mass = MaxZMass(profile[2], gadget.n());
  audit.xy_bound = 2 * eps;
  audit.z_bound = 9 * eps;
  if (audit.max_xy_gap > audit.xy_bound + kAuditSlack) {
    throw LemmaViolation("team members differ by more than 2 eps");
  }
  if (audit.max_z_mass > audit.z_bound + kAuditSlack) {
    throw LemmaViolation("adversary puts more than 9 eps on a penalty action");
  }
  return audit;
}

QuadraticMinMaxProblem QuadraticGadget(const RationalMatrix& r) {
  CheckUnitRange(r);
  const int n = r.rows();
  SymmetricSkewParts parts = DecomposeSymmetricSkew(r);
  return QuadraticMinMaxProblem(parts.symmetric, parts.symmetric,
                                std::move(parts.skew), SimplexProduct{n, n},
                                4.0 * n, 4.0 * n);
}

BackmapResult SymmetricBackmap(const RationalMatrix& r, const MixedStrategy& x,
                               const MixedStrategy& y, double gap) {
  if (gap < 0) throw InvalidArgument("negative gap");
  if (x.size() != r.rows() || y.size() != r.rows()) {
    throw DimensionError("strategy size does not match the source matrix");
  }
  if (LinfDistance(x.probs(), y.probs()) > kClampTolerance) {
    throw InvalidArgument("symmetric back-map needs x = y");
  }
  const double measured = GdaGap(QuadraticGadget(r), x, x).gap;
  if (measured > gap + kCertificateSlack) {
    throw PreconditionError("claimed gap is below the measured GDA gap");
  }
  const int n = r.rows();
  return {x, std::sqrt(2.0) * gap * (2 * n + 1), "vi-for-ne"};
}

double DefaultCouplingWidth(double target_gap, int n) {
  if (target_gap <= 0 || n <= 0) {
    throw InvalidArgument("coupling width needs a positive gap and dimension");
  }
  return std::min(1.0, std::pow(target_gap, 0.25) * std::pow(n, -0.25));
}

QuadraticMinMaxProblem CoupledGadget(const RationalMatrix& r, double width) {
  CheckUnitRange(r);
  if (!(width >= 0 && width <= 1)) {
    throw InvalidArgument("coupling width must lie in [0, 1]");
  }
  const int n = r.rows();
  SymmetricSkewParts parts = DecomposeSymmetricSkew(r);
  return QuadraticMinMaxProblem(parts.symmetric, parts.symmetric,
                                std::move(parts.skew), JointDomain(n, width),
                                4.0 * n, 4.0 * n);
}

BackmapResult MedianBackmap(const RationalMatrix& r, const MixedStrategy& x,
                            const MixedStrategy& y, double gap, double width) {
  if (gap < 0) throw InvalidArgument("negative gap");
  if (width <= 0) throw InvalidArgument("median back-map needs width > 0");
  const QuadraticMinMaxProblem problem = CoupledGadget(r, width);
  const auto& domain = std::get<JointDomain>(problem.domain());
  if (x.size() != r.rows() || y.size() != r.rows()) {
    throw DimensionError("strategy size does not match the source matrix");
  }
  if (domain.CouplingViolation(x.probs(), y.probs()) >
      DykstraOptions{}.feasibility) {
    throw InvalidArgument("point lies outside the joint domain");
  }
  const double measured = GdaGap(problem, x, y).gap;
  if (measured > gap + kCertificateSlack) {
    throw PreconditionError("claimed gap is below the measured safe-GDA gap");
  }
  const int n = r.rows();
  std::vector<double> mid(n);
  for (int i = 0; i < n; ++i) mid[i] = 0.5 * (x[i] + y[i]);
  const double k =
      SafeGapConstant(problem.smoothness(), problem.lipschitz());
  const double bound = 2.0 * n * n * width +
                       2.0 * k * std::pow(n, 1.5) * std::sqrt(gap) / width;
  return {MixedStrategy(std::move(mid)), bound, "median-joint-domain"};
}

Team3v3Gadget::Team3v3Gadget(const RationalMatrix& r, Rational epsilon)
    : Team3v3Gadget(r, epsilon, CheckedSymmetricPart(r, epsilon)) {}

Team3v3Gadget::Team3v3Gadget(const RationalMatrix& r, Rational epsilon,
                             ShiftedMatrix symmetric_part)
    : r_(r), a_(std::move(symmetric_part.matrix)), c_(r.Transposed() - r),
      epsilon_(std::move(epsilon)), shift_(std::move(symmetric_part.shift)),
      abs_min_(abs(MinEntry(a_))),
      range_(2.0 * ToDouble(abs_min_) + MaxAbs(c_) +
             2.0 * (ToDouble(abs_min_ / epsilon_) + ToDouble(abs_min_))),
      game_(MakeTeam3v3Game(a_, c_, abs_min_ / epsilon_, abs_min_)) {}

BackmapResult Team3v3AuditAndBackmap(const Team3v3Gadget& gadget,
                                     const MixedProfile& profile,
                                     StructureAudit* audit) {
  gadget.game().CheckProfile(profile);
  for (int p = 0; p < 3; ++p) {
    if (LinfDistance(profile[p].probs(), profile[p + 3].probs()) >
        kAuditSlack) {
      throw PreconditionError("profile is not symmetric across the teams");
    }
  }
  const double eps = ToDouble(gadget.epsilon());
  RequireCertified(gadget.game(), profile, eps * eps);
  const int n = gadget.n();
  StructureAudit measured;
  measured.max_xy_gap =
      std::max(LinfDistance(profile[0].probs(), profile[1].probs()),
               LinfDistance(profile[3].probs(), profile[4].probs()));
  measured.max_z_mass =
      std::max(MaxZMass(profile[2], n), MaxZMass(profile[5], n));
  measured.xy_bound = 2 * eps;
  measured.z_bound = 9 * eps;
  if (audit != nullptr) *audit = measured;
  if (measured.max_xy_gap > measured.xy_bound + kAuditSlack) {
    throw LemmaViolation("team members differ by more than 2 eps");
  }
  if (measured.max_z_mass > measured.z_bound + kAuditSlack) {
    throw LemmaViolation("adversary puts more than 9 eps on a penalty action");
  }
  return {profile[0], (21.0 * n + 1) * ToDouble(gadget.penalty_scale()) * eps,
          "team3v3-backmap-(21n+1)|Amin|eps"};
}

}  // namespace symgames
