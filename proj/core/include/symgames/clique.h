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

#ifndef SYMGAMES_CLIQUE_H_
#define SYMGAMES_CLIQUE_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "symgames/game.h"
#include "symgames/graph.h"
#include "symgames/minmax.h"

namespace symgames {

// Parameters of the robust clique game. The proofs about it need
// n ≥ k ≥ 10, δ = ½ and ε < δ(1 − δ)/(6n⁷); anything else is accepted but
// marked as outside that regime.
struct ParameterRegime {
  int n = 0;
  int k = 0;
  Rational delta;
  Rational epsilon;

  bool strict() const;
};

// The five-vertex graph with the 4-clique {1, 2, 3, 4} and the extra
// vertex 5 joined to 3 and 4 (0-indexed internally).
Graph ExampleCliqueGraph();

// −1 on the diagonal, 0 on edges, −2 elsewhere.
RationalMatrix PayoffFromGraph(const Graph& graph);
// δ on the diagonal, 1 on edges, 0 elsewhere; δ ∈ (0, 1).
RationalMatrix PayoffFromGraphDelta(const Graph& graph, const Rational& delta);

enum class CliqueGameVariant { kBase, kRobust };

// Symmetric identical-payoff game on
//   B = [ inner  r·1 ]
//       [ r·1ᵀ   V   ]
// with inner = A(G) (base) or Ā(G, δ) (robust).
struct CliqueGame {
  Graph graph;
  int k = 0;
  CliqueGameVariant variant = CliqueGameVariant::kBase;
  std::optional<ParameterRegime> regime;
  Rational corner;  // V
  Rational border;  // r
  RationalMatrix matrix;
  BimatrixGame game;
};

// V = −1/k, r = −(2k − 1)/(2(k − 1)k); k ≥ 2.
CliqueGame UniqueNeGame(const Graph& graph, int k);
// V = 1 − 1/k + δ/k, r = V − δ/(n²k⁴) + 3ε, inner matrix Ā(G, δ).
CliqueGame RobustUniqueNeGame(const Graph& graph,
                              const ParameterRegime& regime);

// Uniform distribution on `clique` (0-indexed vertices) over n actions.
ExactStrategy CliqueUniform(const Graph& graph, std::span<const int> clique);

struct NashgapReport {
  int k = 0;
  int equilibria = 0;
  int singular_supports = 0;
  int max_cliques = 0;
  Rational max_value;            // over all enumerated equilibria
  Rational clique_value;         // −1/k
  std::optional<Rational> max_other_value;  // equilibria not clique-uniform
  Rational other_bound;          // −1/(k − 1), meaningful for k ≥ 2
};

inline constexpr int kNashgapVertexCap = 8;

// Enumerates the symmetric equilibria of (A(G), A(G)) and checks that every
// maximum-clique uniform profile is an equilibrium of value −1/k while all
// other equilibria are worth at most −1/(k − 1). Throws LemmaViolation.
NashgapReport NashgapAudit(const Graph& graph, int cap = kNashgapVertexCap);

struct WsneValueReport {
  int k = 0;
  int candidates = 0;  // candidates within the regime's ε
  int clique_supported = 0;
  int other_supported = 0;
  bool strict_regime = false;
  // Smallest slack of either value bound; nullopt when no candidate
  // exercised it.
  std::optional<Rational> clique_value_margin;
  std::optional<Rational> clique_distance_margin;
  std::optional<Rational> other_value_margin;
  std::optional<Rational> max_clique_value;
  std::optional<Rational> max_other_value;
};

// Checks both value bounds for symmetric well-supported equilibria of
// (Ā, Ā) with Ā = Ā(G, δ): a lattice of Δⁿ at `resolution` plus
// perturbations of every exact equilibrium. A candidate counts when its
// well-supported gap ε_c is at most the regime's ε and is checked at ε_c.
// Throws LemmaViolation on the first failure.
WsneValueReport WsneValueAudit(const Graph& graph,
                               const ParameterRegime& regime,
                               int resolution = 6);

// Vertices that have a non-neighbor. When the maximum clique has size k
// there are at least n − k + 1 of them, and each has a non-neighbor inside
// the set. Throws InvalidArgument on complete graphs.
std::vector<int> FindNonadjacentCover(const Graph& graph, int k);

enum class CanonicalForm { kTrivialLast, kCliqueUniform, kHalfMix, kOther };

std::string_view CanonicalFormName(CanonicalForm form);

enum class ApproximationKind { kNash, kWellSupported };

struct Classification {
  CanonicalForm form = CanonicalForm::kOther;
  double distance = 0.0;   // ℓ∞ to the nearest canonical profile
  std::vector<int> clique; // empty for the trivial form
  double bound = 0.0;      // n⁶√ε (Nash) or 2n⁶ε (well-supported)
  bool asserted = false;   // bound enforced (strict regime only)
};

// Nearest of e_{n+1}, the k-clique uniforms and their half mixtures with
// e_{n+1}, ties going to the earlier form. Requires (x̂, x̂) to be an ε-NE
// (or ε-WSNE) of the game. Beyond the closeness bound the result is kOther,
// or a LemmaViolation in the strict regime.
Classification ClassifySymmetricProfile(const CliqueGame& game,
                                        const MixedStrategy& x_hat,
                                        double epsilon,
                                        ApproximationKind kind =
                                            ApproximationKind::kNash);

// f(x, y) = yᵀB̄y − xᵀB̄x on Δⁿ⁺¹ × Δⁿ⁺¹ for the robust game.
QuadraticMinMaxProblem NonsymInstance(const Graph& graph,
                                      const ParameterRegime& regime);

}  // namespace symgames

#endif  // SYMGAMES_CLIQUE_H_
