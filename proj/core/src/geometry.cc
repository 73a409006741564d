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

#include "symgames/geometry.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace symgames {

std::vector<double> ProjectSimplexValues(std::span<const double> v) {
  if (v.empty()) throw DimensionError("projection of an empty vector");
  for (double e : v) {
    if (!std::isfinite(e)) throw InvalidArgument("non-finite projection input");
  }
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double prefix = 0.0;
  double threshold = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) threshold = candidate;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::max(v[i] - threshold, 0.0);
  }
  return out;
}

MixedStrategy ProjectSimplex(std::span<const double> v) {
  return MixedStrategy(ProjectSimplexValues(v));
}

JointDomain::JointDomain(int dimension, double width)
    : dimension_(dimension), width_(width) {
  if (dimension <= 0) throw DimensionError("joint domain needs n ≥ 1");
  if (!(width >= 0.0) || !std::isfinite(width)) {
    throw InvalidArgument("coupling width must be a finite value ≥ 0");
  }
}

double JointDomain::CouplingViolation(std::span<const double> x,
                                      std::span<const double> y) const {
  if (static_cast<int>(x.size()) != dimension_ ||
      static_cast<int>(y.size()) != dimension_) {
    throw DimensionError("point does not match the joint domain");
  }
  double worst = 0.0;
  for (int i = 0; i < dimension_; ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]) - width_);
  }
  return worst;
}

namespace {

// Projection onto {|a_i − b_i| ≤ w}: pairs that are too far apart move
// symmetrically towards their midpoint.
void ProjectBox(std::vector<double>& a, std::vector<double>& b, double w) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (std::abs(d) <= w) continue;
    const double mid = 0.5 * (a[i] + b[i]);
    const double half = d > 0 ? 0.5 * w : -0.5 * w;
    a[i] = mid + half;
    b[i] = mid - half;
  }
}

double SquaredMove(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

JointProjection ProjectJoint(std::span<const double> x,
                             std::span<const double> y,
                             const JointDomain& domain,
                             const DykstraOptions& options) {
  const int n = domain.dimension();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw DimensionError("point does not match the joint domain");
  }
  // Iterate (a_x, a_y) ∈ Δⁿ×Δⁿ and (b_x, b_y) in the box with Dykstra
  // corrections p (for the simplex step) and q (for the box step).
  std::vector<double> bx(x.begin(), x.end()), by(y.begin(), y.end());
  std::vector<double> px(n, 0.0), py(n, 0.0), qx(n, 0.0), qy(n, 0.0);
  std::vector<double> ax(n), ay(n), prev_ax(n, 0.0), prev_ay(n, 0.0);
  std::vector<double> tx(n), ty(n);
  const double tol2 = options.tolerance * options.tolerance;
  double violation = 0.0;
  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) {
      tx[i] = bx[i] + px[i];
      ty[i] = by[i] + py[i];
    }
    ax = ProjectSimplexValues(tx);
    ay = ProjectSimplexValues(ty);
    for (int i = 0; i < n; ++i) {
      px[i] = tx[i] - ax[i];
      py[i] = ty[i] - ay[i];
    }
    std::vector<double> nbx(n), nby(n);
    for (int i = 0; i < n; ++i) {
      nbx[i] = ax[i] + qx[i];
      nby[i] = ay[i] + qy[i];
    }
    const std::vector<double> sx = nbx, sy = nby;
    ProjectBox(nbx, nby, domain.width());
    for (int i = 0; i < n; ++i) {
      qx[i] = sx[i] - nbx[i];
      qy[i] = sy[i] - nby[i];
    }
    const double move = SquaredMove(ax, prev_ax) + SquaredMove(ay, prev_ay) +
                        SquaredMove(nbx, bx) + SquaredMove(nby, by);
    bx = std::move(nbx);
    by = std::move(nby);
    prev_ax = ax;
    prev_ay = ay;
    violation = domain.CouplingViolation(ax, ay);
    if (sweep > 0 && move <= tol2 && violation <= options.feasibility) {
      ++sweep;
      break;
    }
  }
  violation = domain.CouplingViolation(ax, ay);
  if (violation > options.feasibility) {
    throw NumericError("Dykstra projection did not reach a feasible point",
                       violation);
  }
  return {MixedStrategy(ax), MixedStrategy(ay), sweep, std::max(violation, 0.0)};
}

MixedStrategy RandomSimplexPoint(int dimension, std::mt19937_64& rng) {
  if (dimension <= 0) throw DimensionError("simplex dimension must be ≥ 1");
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> w(dimension);
  double sum = 0.0;
  for (double& v : w) {
    v = exp(rng);
    sum += v;
  }
  for (double& v : w) v /= sum;
  return MixedStrategy(std::move(w));
}

std::int64_t SimplexGridSize(int dimension, int resolution) {
  if (dimension <= 0 || resolution < 1) return -1;
  // C(m + n − 1, n − 1), built incrementally so every prefix is an integer.
  const int k = dimension - 1;
  std::int64_t value = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t g = std::gcd(value, static_cast<std::int64_t>(i));
    const std::int64_t factor = (resolution + i) / (i / g);
    if (__builtin_mul_overflow(value / g, factor, &value)) return -1;
  }
  return value;
}

SimplexGrid::SimplexGrid(int dimension, int resolution, std::int64_t cap)
    : resolution_(resolution) {
  if (dimension <= 0) throw DimensionError("grid dimension must be ≥ 1");
  if (resolution < 1) throw InvalidArgument("grid resolution must be ≥ 1");
  size_ = SimplexGridSize(dimension, resolution);
  if (size_ < 0 || size_ > cap) {
    throw SizeError("simplex grid exceeds the cap of " + std::to_string(cap) +
                    " points");
  }
  counts_.assign(dimension, 0);
  Reset();
}

void SimplexGrid::Reset() {
  std::fill(counts_.begin(), counts_.end(), 0);
  counts_[0] = resolution_;
}

bool SimplexGrid::Next() {
  const int n = static_cast<int>(counts_.size());
  int i = n - 2;
  while (i >= 0 && counts_[i] == 0) --i;
  if (i < 0) return false;
  const int tail = counts_[n - 1];
  counts_[n - 1] = 0;
  counts_[i] -= 1;
  counts_[i + 1] = tail + 1;
  return true;
}

MixedStrategy SimplexGrid::point() const {
  std::vector<double> w(counts_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = static_cast<double>(counts_[i]) / resolution_;
  }
  return MixedStrategy(std::move(w));
}

ExactStrategy SimplexGrid::exact_point() const {
  std::vector<Rational> w(counts_.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = Fraction(counts_[i], resolution_);
  }
  return ExactStrategy(std::move(w));
}

}  // namespace symgames
