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

#include "symgames/minmax.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace symgames {
namespace {

constexpr double kFeasibilityTolerance = 1e-8;
constexpr double kAntisymmetryTolerance = 1e-10;

RealMatrix Negated(const RealMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = -m(i, j);
  }
  return out;
}

// a·u + b·v with both products summed left to right.
std::vector<double> SumOfProducts(const RealMatrix& a, std::span<const double> u,
                                  const RealMatrix& b,
                                  std::span<const double> v) {
  std::vector<double> first = Multiply(a, u);
  const std::vector<double> second = Multiply(b, v);
  for (std::size_t i = 0; i < first.size(); ++i) first[i] += second[i];
  return first;
}

void CheckPoint(const QuadraticMinMaxProblem& problem,
                std::span<const double> x, std::span<const double> y) {
  if (static_cast<int>(x.size()) != problem.x_dimension() ||
      static_cast<int>(y.size()) != problem.y_dimension()) {
    throw DimensionError("point does not match the problem dimensions");
  }
}

void CheckFeasible(const QuadraticMinMaxProblem& problem,
                   const MixedStrategy& x, const MixedStrategy& y) {
  CheckPoint(problem, x.probs(), y.probs());
  if (const auto* joint = std::get_if<JointDomain>(&problem.domain())) {
    const double violation = joint->CouplingViolation(x.probs(), y.probs());
    if (violation > kFeasibilityTolerance) {
      throw PreconditionError("point violates the coupling constraint by " +
                              std::to_string(violation));
    }
  }
}

}  // namespace

double SpectralNorm(const RealMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  return svd.singularValues()(0);
}

QuadraticMinMaxProblem::QuadraticMinMaxProblem(
    RationalMatrix qx, RationalMatrix qy, RationalMatrix coupling,
    MinMaxDomain domain, std::optional<double> smoothness,
    std::optional<double> lipschitz)
    : qx_(std::move(qx)),
      qy_(std::move(qy)),
      m_(std::move(coupling)),
      domain_(std::move(domain)) {
  if (!IsSymmetric(qx_) || !IsSymmetric(qy_)) {
    throw InvalidArgument("Qx and Qy must be symmetric");
  }
  if (m_.rows() != qy_.rows() || m_.cols() != qx_.rows()) {
    throw DimensionError("M must have shape dim(y) × dim(x)");
  }
  if (const auto* product = std::get_if<SimplexProduct>(&domain_)) {
    if (product->x_dimension != qx_.rows() ||
        product->y_dimension != qy_.rows()) {
      throw DimensionError("domain does not match the matrices");
    }
  } else {
    const auto& joint = std::get<JointDomain>(domain_);
    if (joint.dimension() != qx_.rows() || joint.dimension() != qy_.rows()) {
      throw DimensionError("joint domain does not match the matrices");
    }
  }
  const RealMatrix qx_real = ToReal(qx_);
  const RealMatrix qy_real = ToReal(qy_);
  const RealMatrix m_real = ToReal(m_);
  neg_qx_ = Negated(qx_real);
  neg_qy_ = Negated(qy_real);
  m_transposed_ = m_real.Transposed();
  neg_m_ = Negated(m_real);
  const double nx = SpectralNorm(qx_real);
  const double ny = SpectralNorm(qy_real);
  const double nm = SpectralNorm(m_real);
  smoothness_ = smoothness.value_or(2.0 * (nx + ny + nm));
  lipschitz_ = lipschitz.value_or(nx + ny + 2.0 * nm);
  if (smoothness_ < 0.0 || lipschitz_ < 0.0) {
    throw InvalidArgument("smoothness and Lipschitz bounds must be ≥ 0");
  }
}

bool QuadraticMinMaxProblem::antisymmetric() const {
  return qx_ == qy_ && m_.square() && IsSkewSymmetric(m_);
}

double QuadraticMinMaxProblem::Value(std::span<const double> x,
                                     std::span<const double> y) const {
  CheckPoint(*this, x, y);
  const auto qyy = Multiply(neg_qy_, y);
  const auto qxx = Multiply(neg_qx_, x);
  const auto mx = Multiply(neg_m_, x);
  return -0.5 * Dot(y, qyy) + 0.5 * Dot(x, qxx) - Dot(y, mx);
}

std::vector<double> QuadraticMinMaxProblem::MinimizerFeedback(
    std::span<const double> x, std::span<const double> y) const {
  CheckPoint(*this, x, y);
  return SumOfProducts(neg_qx_, x, m_transposed_, y);
}

std::vector<double> QuadraticMinMaxProblem::MaximizerFeedback(
    std::span<const double> x, std::span<const double> y) const {
  CheckPoint(*this, x, y);
  return SumOfProducts(neg_qy_, y, neg_m_, x);
}

Gradient QuadraticMinMaxProblem::Grad(std::span<const double> x,
                                      std::span<const double> y) const {
  Gradient g{MinimizerFeedback(x, y), MaximizerFeedback(x, y)};
  for (double& v : g.y) v = -v;
  return g;
}

MinMaxPoint GdaMap(const QuadraticMinMaxProblem& problem,
                   const MixedStrategy& x, const MixedStrategy& y,
                   double stepsize) {
  if (!(stepsize > 0.0)) throw InvalidArgument("stepsize must be positive");
  CheckFeasible(problem, x, y);
  const auto fx = problem.MinimizerFeedback(x.probs(), y.probs());
  const auto fy = problem.MaximizerFeedback(x.probs(), y.probs());
  std::vector<double> ux(fx.size()), uy(fy.size());
  for (std::size_t i = 0; i < ux.size(); ++i) ux[i] = x[i] - stepsize * fx[i];
  for (std::size_t i = 0; i < uy.size(); ++i) uy[i] = y[i] - stepsize * fy[i];
  if (const auto* joint = std::get_if<JointDomain>(&problem.domain())) {
    JointProjection p = ProjectJoint(ux, uy, *joint);
    return {std::move(p.x), std::move(p.y)};
  }
  return {ProjectSimplex(ux), ProjectSimplex(uy)};
}

GapReport GdaGap(const QuadraticMinMaxProblem& problem, const MixedStrategy& x,
                 const MixedStrategy& y, double stepsize) {
  MinMaxPoint image = GdaMap(problem, x, y, stepsize);
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += (x[i] - image.x[i]) * (x[i] - image.x[i]);
  for (int i = 0; i < y.size(); ++i) s += (y[i] - image.y[i]) * (y[i] - image.y[i]);
  const double gap = std::sqrt(s);
  const bool joint = problem.on_joint_domain();
  return GapReport{
      .gap = gap,
      .stepsize = stepsize,
      .vi_bound = joint ? SafeGapToViBound(gap, problem.smoothness(),
                                           problem.lipschitz())
                        : GapToViBound(gap, problem.smoothness()),
      .bound_name = joint ? "safe-gda-gap-to-vi" : "gradient-mapping-gap-to-vi",
      .certified = stepsize == 1.0,
      .point = {x, y},
      .image = std::move(image)};
}

FoneResiduals CheckFone(const QuadraticMinMaxProblem& problem,
                        const MixedStrategy& x, const MixedStrategy& y) {
  if (problem.on_joint_domain()) {
    throw UnsupportedDomain(
        "first-order NE residuals are only defined on simplex products");
  }
  CheckPoint(problem, x.probs(), y.probs());
  const Gradient g = problem.Grad(x.probs(), y.probs());
  const double min_gx = *std::min_element(g.x.begin(), g.x.end());
  const double max_gy = *std::max_element(g.y.begin(), g.y.end());
  FoneResiduals r;
  r.x = Dot(x.probs(), g.x) - min_gx;
  r.y = max_gy - Dot(y.probs(), g.y);
  return r;
}

double GapToViBound(double gap, double smoothness) {
  if (gap < 0.0 || smoothness < 0.0) {
    throw InvalidArgument("gap and smoothness must be ≥ 0");
  }
  return gap * (smoothness + 1.0);
}

double SafeGapConstant(double smoothness, double lipschitz) {
  if (smoothness < 0.0 || lipschitz < 0.0) {
    throw InvalidArgument("smoothness and Lipschitz bounds must be ≥ 0");
  }
  return (smoothness + 1.0) * std::sqrt(lipschitz + 4.0 * std::sqrt(2.0));
}

double SafeGapToViBound(double gap, double smoothness, double lipschitz) {
  if (gap < 0.0) throw InvalidArgument("gap must be ≥ 0");
  return std::sqrt(gap) * SafeGapConstant(smoothness, lipschitz);
}

bool AntisymmetryCheck(const QuadraticMinMaxProblem& problem, int samples,
                       std::uint64_t seed) {
  if (problem.x_dimension() != problem.y_dimension()) {
    throw DimensionError("antisymmetry needs a square domain");
  }
  if (!problem.antisymmetric()) return false;
  std::mt19937_64 rng(seed);
  const int n = problem.x_dimension();
  for (int s = 0; s < samples; ++s) {
    const MixedStrategy x = RandomSimplexPoint(n, rng);
    const MixedStrategy y = RandomSimplexPoint(n, rng);
    const double sum = problem.Value(x.probs(), y.probs()) +
                       problem.Value(y.probs(), x.probs());
    if (std::abs(sum) > kAntisymmetryTolerance) return false;
  }
  return true;
}

}  // namespace symgames
