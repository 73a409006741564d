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

#include "symgames/dynamics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "symgames/errors.h"
#include "symgames/geometry.h"

namespace symgames {
namespace {

using Vec = std::vector<double>;

Vec Step(std::span<const double> point, std::span<const double> feedback,
         double eta) {
  Vec moved(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    moved[i] = point[i] - eta * feedback[i];
  }
  return ProjectSimplexValues(moved);
}

Vec Extrapolate(const Vec& current, const Vec& previous) {
  Vec out(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) {
    out[i] = 2.0 * current[i] - previous[i];
  }
  return out;
}

Vec MultiplicativeStep(const Vec& point, const Vec& feedback, double eta) {
  Vec logits(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    logits[i] = std::log(point[i]) - eta * feedback[i];
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double& v : logits) {
    v = std::exp(v - top);
    total += v;
  }
  for (double& v : logits) v /= total;
  for (double v : logits) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw NumericError("multiplicative weights underflowed to zero", v);
    }
  }
  return logits;
}

void CheckFinite(const Vec& v) {
  for (double e : v) {
    if (!std::isfinite(e)) throw NumericError("non-finite iterate");
  }
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGda: return "gda";
    case Algorithm::kExtraGradient: return "eg";
    case Algorithm::kOptimisticGda: return "ogda";
    case Algorithm::kOmwu: return "omwu";
    case Algorithm::kAlternatingGda: return "alt-gda";
  }
  return "gda";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a :
       {Algorithm::kGda, Algorithm::kExtraGradient, Algorithm::kOptimisticGda,
        Algorithm::kOmwu, Algorithm::kAlternatingGda}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

bool IsSymmetricAlgorithm(Algorithm algorithm) {
  return algorithm != Algorithm::kAlternatingGda;
}

Trajectory Run(const QuadraticMinMaxProblem& problem,
               const DynamicsConfig& config) {
  if (problem.on_joint_domain()) {
    throw UnsupportedDomain("dynamics run on simplex products only");
  }
  const int n = problem.x_dimension();
  if (problem.y_dimension() != n) {
    throw DimensionError("dynamics need x and y of equal dimension");
  }
  if (!(config.stepsize > 0.0 && config.stepsize <= 1.0)) {
    throw InvalidArgument("stepsize must lie in (0, 1]");
  }
  if (config.horizon < 1) throw InvalidArgument("horizon must be at least 1");

  MinMaxPoint start = config.initial.value_or(
      MinMaxPoint{MixedStrategy::Uniform(n), MixedStrategy::Uniform(n)});
  if (start.x.size() != n || start.y.size() != n) {
    throw DimensionError("initial point does not match the problem");
  }
  Vec x = start.x.values();
  Vec y = start.y.values();
  if (config.algorithm == Algorithm::kOmwu) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] <= 0.0 || y[i] <= 0.0) {
        throw InvalidArgument("OMWU needs a strictly positive start");
      }
    }
  }

  const double eta = config.stepsize;
  Trajectory out;
  out.points.reserve(config.horizon);
  Vec prev_gx, prev_gy;
  for (int t = 0; t < config.horizon; ++t) {
    MixedStrategy xs(x), ys(y);
    out.gaps.push_back(GdaGap(problem, xs, ys).gap);
    out.drifts.push_back(LinfDistance(x, y));
    out.utilities.push_back(problem.Value(x, y));
    out.points.push_back({std::move(xs), std::move(ys)});
    if (t + 1 == config.horizon) break;

    Vec gx = problem.MinimizerFeedback(x, y);
    Vec gy = problem.MaximizerFeedback(x, y);
    switch (config.algorithm) {
      case Algorithm::kGda: {
        x = Step(x, gx, eta);
        y = Step(y, gy, eta);
        break;
      }
      case Algorithm::kExtraGradient: {
        const Vec hx = Step(x, gx, eta);
        const Vec hy = Step(y, gy, eta);
        const Vec lx = problem.MinimizerFeedback(hx, hy);
        const Vec ly = problem.MaximizerFeedback(hx, hy);
        x = Step(x, lx, eta);
        y = Step(y, ly, eta);
        break;
      }
      case Algorithm::kOptimisticGda:
      case Algorithm::kOmwu: {
        const Vec dx = Extrapolate(gx, prev_gx.empty() ? gx : prev_gx);
        const Vec dy = Extrapolate(gy, prev_gy.empty() ? gy : prev_gy);
        if (config.algorithm == Algorithm::kOmwu) {
          x = MultiplicativeStep(x, dx, eta);
          y = MultiplicativeStep(y, dy, eta);
        } else {
          x = Step(x, dx, eta);
          y = Step(y, dy, eta);
        }
        break;
      }
      case Algorithm::kAlternatingGda: {
        x = Step(x, gx, eta);
        y = Step(y, problem.MaximizerFeedback(x, y), eta);
        break;
      }
    }
    CheckFinite(x);
    CheckFinite(y);
    prev_gx = std::move(gx);
    prev_gy = std::move(gy);
  }
  return out;
}

double SymmetryDrift(const Trajectory& trajectory) {
  if (trajectory.drifts.empty()) throw InvalidArgument("empty trajectory");
  return *std::max_element(trajectory.drifts.begin(), trajectory.drifts.end());
}

double MinGap(const Trajectory& trajectory) {
  if (trajectory.gaps.empty()) throw InvalidArgument("empty trajectory");
  return *std::min_element(trajectory.gaps.begin(), trajectory.gaps.end());
}

}  // namespace symgames
