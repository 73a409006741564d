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

#ifndef SYMGAMES_ORACLE_H_
#define SYMGAMES_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "symgames/checks.h"
#include "symgames/game.h"
#include "symgames/graph.h"

namespace symgames {

inline constexpr int kMaxCliqueVertexCap = 20;
inline constexpr int kSupportEnumerationCap = 12;

// Exact solution of a square system, or nullopt when it is singular.
std::optional<std::vector<Rational>> SolveLinearSystem(RationalMatrix a,
                                                       std::vector<Rational> b);

struct CliqueResult {
  int size = 0;
  std::vector<int> vertices;  // sorted, 0-indexed
};

// Exact maximum clique by branch and bound (n ≤ 20).
CliqueResult MaxClique(const Graph& graph);
// Every clique with exactly `size` vertices, each sorted, in lexicographic
// order (n ≤ 20).
std::vector<std::vector<int>> CliquesOfSize(const Graph& graph, int size);

struct SymmetricEquilibrium {
  ExactStrategy strategy;
  Rational value;  // xᵀAx
};

struct SymmetricEnumeration {
  std::vector<SymmetricEquilibrium> equilibria;
  int singular_supports = 0;
};

// All symmetric equilibria (x, x) of the symmetric game (A, Aᵀ) with an
// isolated solution on their support, found by solving the indifference
// system on every support exactly (n ≤ 12). Supports whose system is
// singular are skipped and counted.
SymmetricEnumeration SymmetricSupportEnumeration(
    const RationalMatrix& a, Orientation orientation = Orientation::kMaximize);

struct BimatrixEquilibrium {
  ExactStrategy row;
  ExactStrategy col;
  Rational row_value;
  Rational col_value;
};

struct BimatrixEnumeration {
  std::vector<BimatrixEquilibrium> equilibria;
  int singular_supports = 0;
};

// Equal-size support enumeration; complete for nondegenerate games.
BimatrixEnumeration BimatrixSupportEnumeration(const BimatrixGame& game);

struct GridHit {
  MixedProfile profile;
  double max_regret = 0.0;
};

// Every profile of the product grid (coordinates in (1/m)ℤ per player) with
// max regret ≤ eps (+1e-12). Shards of the first player's grid run on
// `threads` workers (0 = hardware concurrency); output order is
// deterministic.
std::vector<GridHit> GridNeSearch(const Game& game, int resolution, double eps,
                                  std::int64_t cap = 100'000'000,
                                  int threads = 0);

struct RefineOptions {
  double damping = 0.1;
  int max_iterations = 100'000;
  // Polymatrix games only: every `polish_interval` steps, solve the
  // indifference system on every combination of sub-supports of the recent
  // average iterate (plus the current best responses), up to
  // `max_polish_systems` systems. 0 disables polishing.
  int polish_interval = 500;
  double support_threshold = 1e-3;
  std::int64_t max_polish_systems = 16384;
};

struct RefineResult {
  MixedProfile profile;  // best profile found
  Certificate certificate;
  bool converged = false;
  int iterations = 0;
  double damping = 0.0;
};

// Damped best-response iteration: every player moves a `damping` fraction
// of the way towards a pure best response, until the max regret reaches
// `target_regret` or the iteration cap, with periodic support polishing on
// polymatrix games. Never claims convergence it has not certified.
RefineResult LocalNeRefine(const Game& game, MixedProfile start,
                           double target_regret,
                           const RefineOptions& options = {});

struct SearchOptions {
  RefineOptions refine{.max_iterations = 20'000};
  int restarts = 16;
  std::uint64_t seed = 1;
};

struct SearchResult {
  RefineResult best;
  int attempts = 0;
};

// LocalNeRefine from uniformly random starting profiles until one run
// certifies `target_regret` or the restarts are used up.
SearchResult LocalNeSearch(const Game& game, double target_regret,
                           const SearchOptions& options = {});

}  // namespace symgames

#endif  // SYMGAMES_ORACLE_H_
