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

#ifndef SYMGAMES_GEOMETRY_H_
#define SYMGAMES_GEOMETRY_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "symgames/game.h"

namespace symgames {

// Euclidean projection onto the probability simplex (sort and threshold).
MixedStrategy ProjectSimplex(std::span<const double> v);
// Same projection without wrapping the result in a MixedStrategy.
std::vector<double> ProjectSimplexValues(std::span<const double> v);

// D = {(x, y) ∈ Δⁿ × Δⁿ : |x_i − y_i| ≤ width for all i}.
class JointDomain {
 public:
  JointDomain(int dimension, double width);

  int dimension() const { return dimension_; }
  double width() const { return width_; }

  // Largest amount by which a simplex pair breaks the coupling constraint.
  double CouplingViolation(std::span<const double> x,
                           std::span<const double> y) const;

 private:
  int dimension_;
  double width_;
};

struct DykstraOptions {
  double tolerance = 1e-10;
  int max_sweeps = 100'000;
  double feasibility = 1e-8;
};

struct JointProjection {
  MixedStrategy x;
  MixedStrategy y;
  int sweeps = 0;
  double violation = 0.0;
};

// Nearest point of D by Dykstra's alternating projections between Δⁿ × Δⁿ
// and the coupling box.
JointProjection ProjectJoint(std::span<const double> x,
                             std::span<const double> y,
                             const JointDomain& domain,
                             const DykstraOptions& options = {});

// Uniformly distributed point of Δⁿ (flat Dirichlet).
MixedStrategy RandomSimplexPoint(int dimension, std::mt19937_64& rng);

inline constexpr std::int64_t kDefaultGridCap = 100'000'000;

// Number of points of Δⁿ with coordinates in (1/m)ℤ, or -1 on overflow.
std::int64_t SimplexGridSize(int dimension, int resolution);

// Streams the lattice points of Δⁿ with coordinates in (1/m)ℤ.
//
//   SimplexGrid grid(3, 4);
//   do { Use(grid.point()); } while (grid.Next());
class SimplexGrid {
 public:
  SimplexGrid(int dimension, int resolution,
              std::int64_t cap = kDefaultGridCap);

  std::int64_t size() const { return size_; }
  int resolution() const { return resolution_; }
  // Integer numerators of the current point; they sum to the resolution.
  const std::vector<int>& counts() const { return counts_; }
  MixedStrategy point() const;
  ExactStrategy exact_point() const;

  // Advances to the next point; false once the stream is exhausted.
  bool Next();
  void Reset();

 private:
  int resolution_;
  std::int64_t size_;
  std::vector<int> counts_;
};

}  // namespace symgames

#endif  // SYMGAMES_GEOMETRY_H_
