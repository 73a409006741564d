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

#ifndef SYMGAMES_MINMAX_H_
#define SYMGAMES_MINMAX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symgames/game.h"
#include "symgames/geometry.h"

namespace symgames {

struct SimplexProduct {
  int x_dimension = 0;
  int y_dimension = 0;
};

using MinMaxDomain = std::variant<SimplexProduct, JointDomain>;

struct Gradient {
  std::vector<double> x;  // ∇ₓf, descended by the minimizer
  std::vector<double> y;  // ∇ᵧf, ascended by the maximizer
};

// f(x, y) = ½ yᵀQy y − ½ xᵀQx x + yᵀ M x, with x minimizing and y maximizing.
class QuadraticMinMaxProblem {
 public:
  // `smoothness` (L) and `lipschitz` (G) default to spectral-norm estimates:
  // L = 2(‖Qx‖₂ + ‖Qy‖₂ + ‖M‖₂) and G = ‖Qx‖₂ + ‖Qy‖₂ + 2‖M‖₂.
  QuadraticMinMaxProblem(RationalMatrix qx, RationalMatrix qy,
                         RationalMatrix coupling, MinMaxDomain domain,
                         std::optional<double> smoothness = std::nullopt,
                         std::optional<double> lipschitz = std::nullopt);

  const RationalMatrix& qx() const { return qx_; }
  const RationalMatrix& qy() const { return qy_; }
  const RationalMatrix& coupling() const { return m_; }
  const MinMaxDomain& domain() const { return domain_; }
  bool on_joint_domain() const {
    return std::holds_alternative<JointDomain>(domain_);
  }
  int x_dimension() const { return qx_.rows(); }
  int y_dimension() const { return qy_.rows(); }
  double smoothness() const { return smoothness_; }
  double lipschitz() const { return lipschitz_; }

  // Qx = Qy and M = −Mᵀ, compared exactly.
  bool antisymmetric() const;

  double Value(std::span<const double> x, std::span<const double> y) const;
  Gradient Grad(std::span<const double> x, std::span<const double> y) const;
  // Feedback vectors of the two players: ∇ₓf and −∇ᵧf. Both are computed
  // with the same operation order, so on an antisymmetric problem they are
  // bitwise equal at any point with x = y.
  std::vector<double> MinimizerFeedback(std::span<const double> x,
                                        std::span<const double> y) const;
  std::vector<double> MaximizerFeedback(std::span<const double> x,
                                        std::span<const double> y) const;

 private:
  RationalMatrix qx_, qy_, m_;
  MinMaxDomain domain_;
  RealMatrix neg_qx_, neg_qy_, m_transposed_, neg_m_;
  double smoothness_ = 0.0;
  double lipschitz_ = 0.0;
};

double SpectralNorm(const RealMatrix& m);

struct MinMaxPoint {
  MixedStrategy x;
  MixedStrategy y;
};

// One projected step x ← Π(x − η∇ₓf), y ← Π(y + η∇ᵧf); on a joint domain
// the stacked update is projected onto D at once.
MinMaxPoint GdaMap(const QuadraticMinMaxProblem& problem,
                   const MixedStrategy& x, const MixedStrategy& y,
                   double stepsize = 1.0);

struct GapReport {
  double gap = 0.0;
  double stepsize = 1.0;
  double vi_bound = 0.0;
  std::string bound_name;
  bool certified = false;  // bounds hold only for stepsize 1
  MinMaxPoint point;
  MinMaxPoint image;
};

GapReport GdaGap(const QuadraticMinMaxProblem& problem, const MixedStrategy& x,
                 const MixedStrategy& y, double stepsize = 1.0);

struct FoneResiduals {
  double x = 0.0;
  double y = 0.0;
  double max() const { return x > y ? x : y; }
};

// Largest first-order improvement over the vertices of each simplex.
FoneResiduals CheckFone(const QuadraticMinMaxProblem& problem,
                        const MixedStrategy& x, const MixedStrategy& y);

// gap·(L + 1).
double GapToViBound(double gap, double smoothness);
// √gap·(L + 1)·√(G + 4√2).
double SafeGapToViBound(double gap, double smoothness, double lipschitz);
// (L + 1)·√(G + 4√2).
double SafeGapConstant(double smoothness, double lipschitz);

// Structural test plus |f(x,y) + f(y,x)| ≤ 1e-10 on random pairs.
bool AntisymmetryCheck(const QuadraticMinMaxProblem& problem, int samples,
                       std::uint64_t seed = 1);

}  // namespace symgames

#endif  // SYMGAMES_MINMAX_H_
