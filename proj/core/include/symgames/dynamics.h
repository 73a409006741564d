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

#ifndef SYMGAMES_DYNAMICS_H_
#define SYMGAMES_DYNAMICS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "symgames/minmax.h"

namespace symgames {

enum class Algorithm {
  kGda,
  kExtraGradient,
  kOptimisticGda,
  kOmwu,
  kAlternatingGda,
};

// Short names used on the command line: gda, eg, ogda, omwu, alt-gda.
std::string_view AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);
// Both players apply the same rule to their own feedback history.
bool IsSymmetricAlgorithm(Algorithm algorithm);

struct DynamicsConfig {
  Algorithm algorithm = Algorithm::kGda;
  double stepsize = 0.1;
  int horizon = 100;
  // Defaults to (uniform, uniform).
  std::optional<MinMaxPoint> initial;
};

// Step t holds the iterate before the t-th update, t = 0 .. horizon − 1.
struct Trajectory {
  std::vector<MinMaxPoint> points;
  std::vector<double> gaps;       // GDA fixed-point gap at stepsize 1
  std::vector<double> drifts;     // ‖xᵗ − yᵗ‖∞
  std::vector<double> utilities;  // f(xᵗ, yᵗ)

  int size() const { return static_cast<int>(points.size()); }
};

// Player x is fed ∇ₓf and player y is fed −∇ᵧf; both descend on their
// feedback. Requires a simplex-product problem with x and y of equal
// dimension.
//
//   OMWU:  x ← x ⊙ exp(−η(2gᵗ − gᵗ⁻¹)), renormalized.
//   OGDA:  x ← Π(x − η(2gᵗ − gᵗ⁻¹)).
Trajectory Run(const QuadraticMinMaxProblem& problem,
               const DynamicsConfig& config);

double SymmetryDrift(const Trajectory& trajectory);
double MinGap(const Trajectory& trajectory);

}  // namespace symgames

#endif  // SYMGAMES_DYNAMICS_H_
