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

#ifndef SYMGAMES_GADGETS_H_
#define SYMGAMES_GADGETS_H_

#include <string>

#include "symgames/game.h"
#include "symgames/minmax.h"

namespace symgames {

struct ShiftedMatrix {
  RationalMatrix matrix;
  Rational shift;  // added to every entry
};

// Adds −(max entry + 2) to every entry, leaving all entries ≤ −2. Equilibria
// of (A, A) are unchanged by a common shift.
ShiftedMatrix ShiftBelowMinusOne(const RationalMatrix& a);

struct BackmapResult {
  MixedStrategy strategy;
  double bound = 0.0;
  std::string bound_name;
};

struct StructureAudit {
  double max_xy_gap = 0.0;   // ‖x − y‖∞ (worst team)
  double max_z_mass = 0.0;   // max_{j ≤ 2n} z_j (worst adversary)
  double xy_bound = 0.0;     // 2ε
  double z_bound = 0.0;      // 9ε
};

// Three-player adversarial team game built from a symmetric matrix A with
// entries ≤ −1. Players 0 (x) and 1 (y) minimize, player 2 (z) maximizes
//   U = ⟨x, Ay⟩ + (|A_min|/ε) Σᵢ (zᵢ(xᵢ − yᵢ) + z_{n+i}(yᵢ − xᵢ))
//       + z_{2n+1}|A_min|.
class TeamGadget {
 public:
  // `shift` records an affine shift already applied to `a` (see
  // ShiftBelowMinusOne); it does not alter the matrix.
  TeamGadget(RationalMatrix a, Rational epsilon, Rational shift = 0);

  int n() const { return a_.rows(); }
  const RationalMatrix& matrix() const { return a_; }
  const Rational& epsilon() const { return epsilon_; }
  const Rational& shift() const { return shift_; }
  // |A_min|.
  const Rational& penalty_scale() const { return abs_min_; }
  // Upper bound on |U| over all profiles.
  double utility_range() const { return range_; }
  const PolymatrixGame& game() const { return game_; }

 private:
  RationalMatrix a_;
  Rational epsilon_;
  Rational shift_;
  Rational abs_min_;
  double range_;
  PolymatrixGame game_;
};

// (x̄, x̄, e_{2n+1}) with x̄ an exact symmetric minimizing equilibrium of
// (A, A); the first one found by support enumeration.
ExactProfile CanonicalTeamNe(const TeamGadget& gadget);

// Requires `profile` to be a certified eps2_certified-NE with
// eps2_certified ≤ ε². Returns y and the bound (21n + 1)|A_min|ε on its
// regret in the symmetric game (A, A) under minimization.
BackmapResult TeamBackmap(const TeamGadget& gadget, const MixedProfile& profile,
                          double eps2_certified);

// For a certified ε²-NE: ‖x − y‖∞ ≤ 2ε and z_j ≤ 9ε for j ≤ 2n. Throws
// LemmaViolation when either bound fails.
StructureAudit GadgetStructureAudit(const TeamGadget& gadget,
                                    const MixedProfile& profile);

// f(x, y) = ½⟨y, Ay⟩ − ½⟨x, Ax⟩ + ⟨y, Cx⟩ on Δⁿ × Δⁿ with A, C the
// symmetric and skew parts of R (entries in [−1, 1]); L = G = 4n.
QuadraticMinMaxProblem QuadraticGadget(const RationalMatrix& r);

// Requires x = y and `gap` ≥ the measured GDA gap at (x, x). The bound
// √2·gap·(2n + 1) holds for the regret of (x, x) in (R, Rᵀ).
BackmapResult SymmetricBackmap(const RationalMatrix& r, const MixedStrategy& x,
                               const MixedStrategy& y, double gap);

// δ = ε^{1/4} n^{−1/4}.
double DefaultCouplingWidth(double target_gap, int n);

// Same objective as QuadraticGadget on the joint domain D(n, δ).
QuadraticMinMaxProblem CoupledGadget(const RationalMatrix& r, double width);

// Requires (x, y) ∈ D(n, δ) with safe-GDA gap ≤ `gap`. Returns (x + y)/2 and
// 2n²δ + 2K n^{3/2} √gap / δ with K = (L + 1)√(G + 4√2), L = G = 4n.
BackmapResult MedianBackmap(const RationalMatrix& r, const MixedStrategy& x,
                            const MixedStrategy& y, double gap, double width);

// Six-player team zero-sum polymatrix game. Players (x, y, z) = (0, 1, 2)
// minimize and (x̂, ŷ, ẑ) = (3, 4, 5) maximize
//   U = ⟨x, Ay⟩ − ⟨x̂, Aŷ⟩ + ⟨x, Cx̂⟩ + δ(x, y, ẑ) − δ(x̂, ŷ, z)
// with A = −½(R + Rᵀ) shifted below −1 and C = Rᵀ − R.
class Team3v3Gadget {
 public:
  Team3v3Gadget(const RationalMatrix& r, Rational epsilon);

  int n() const { return a_.rows(); }
  const RationalMatrix& source() const { return r_; }
  const RationalMatrix& symmetric_part() const { return a_; }
  const RationalMatrix& skew_part() const { return c_; }
  const Rational& epsilon() const { return epsilon_; }
  const Rational& shift() const { return shift_; }
  const Rational& penalty_scale() const { return abs_min_; }
  double utility_range() const { return range_; }
  const PolymatrixGame& game() const { return game_; }

 private:
  Team3v3Gadget(const RationalMatrix& r, Rational epsilon,
                ShiftedMatrix symmetric_part);

  RationalMatrix r_;
  RationalMatrix a_;
  RationalMatrix c_;
  Rational epsilon_;
  Rational shift_;
  Rational abs_min_;
  double range_;
  PolymatrixGame game_;
};

// Requires a certified ε²-NE with (x, y, z) = (x̂, ŷ, ẑ) to 1e-9. Audits
// ‖x − y‖∞, ‖x̂ − ŷ‖∞ ≤ 2ε and z_j, ẑ_j ≤ 9ε, then returns x with the bound
// (21n + 1)|A_min|ε on its regret in (R, Rᵀ).
BackmapResult Team3v3AuditAndBackmap(const Team3v3Gadget& gadget,
                                     const MixedProfile& profile,
                                     StructureAudit* audit = nullptr);

}  // namespace symgames

#endif  // SYMGAMES_GADGETS_H_
