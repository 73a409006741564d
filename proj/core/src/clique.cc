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

#include "symgames/clique.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "symgames/checks.h"
#include "symgames/errors.h"
#include "symgames/geometry.h"
#include "symgames/oracle.h"

namespace symgames {
namespace {

constexpr std::int64_t kWsneGridCap = 2'000'000;
constexpr double kClassifySlack = 1e-9;

Rational Power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

RationalMatrix Bordered(const RationalMatrix& inner, const Rational& border,
                        const Rational& corner) {
  const int n = inner.rows();
  RationalMatrix b(n + 1, n + 1, border);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = inner(i, j);
  }
  b(n, n) = corner;
  return b;
}

Rational QuadraticValue(const RationalMatrix& a, std::span<const Rational> x) {
  return Dot(x, Multiply(a, x));
}

std::vector<int> Support(std::span<const Rational> x) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] > 0) s.push_back(i);
  }
  return s;
}

bool IsSubset(std::span<const int> small, std::span<const int> large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

Rational LinfDistanceExact(std::span<const Rational> a,
                           std::span<const Rational> b) {
  Rational worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, Rational(abs(a[i] - b[i])));
  }
  return worst;
}

void KeepMin(std::optional<Rational>& slot, const Rational& value) {
  if (!slot || value < *slot) slot = value;
}

void KeepMax(std::optional<Rational>& slot, const Rational& value) {
  if (!slot || value > *slot) slot = value;
}

// Profile on n + 1 actions: weight `w` spread evenly on the clique, the rest
// on the last action.
std::vector<double> BorderedForm(int n, std::span<const int> clique,
                                 double clique_weight) {
  std::vector<double> x(n + 1, 0.0);
  for (int v : clique) x[v] = clique_weight / clique.size();
  x[n] = 1.0 - clique_weight;
  return x;
}

}  // namespace

bool ParameterRegime::strict() const {
  if (!(n >= k && k >= 10) || delta != Fraction(1, 2)) return false;
  Rational n7 = Power(Rational(n), 7);
  return epsilon < delta * (1 - delta) / (6 * n7);
}

Graph ExampleCliqueGraph() {
  const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  return Graph(5, edges);
}

RationalMatrix PayoffFromGraph(const Graph& graph) {
  const int n = graph.num_vertices();
  RationalMatrix a(n, n, Rational(-2));
  for (int i = 0; i < n; ++i) {
    a(i, i) = -1;
    for (int j = 0; j < n; ++j) {
      if (i != j && graph.adjacent(i, j)) a(i, j) = 0;
    }
  }
  return a;
}

RationalMatrix PayoffFromGraphDelta(const Graph& graph, const Rational& delta) {
  if (delta <= 0 || delta >= 1) {
    throw InvalidArgument("diagonal parameter must lie in (0, 1)");
  }
  const int n = graph.num_vertices();
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = delta;
    for (int j = 0; j < n; ++j) {
      if (i != j && graph.adjacent(i, j)) a(i, j) = 1;
    }
  }
  return a;
}

CliqueGame UniqueNeGame(const Graph& graph, int k) {
  if (k < 2) throw InvalidArgument("clique game needs k >= 2");
  Rational corner = Fraction(-1, k);
  Rational border = Fraction(-(2 * k - 1), 2 * (k - 1) * k);
  RationalMatrix b = Bordered(PayoffFromGraph(graph), border, corner);
  BimatrixGame game = BimatrixGame::SymmetricIdentical(b);
  return {graph,  k,        CliqueGameVariant::kBase, std::nullopt,
          corner, border,   std::move(b),             std::move(game)};
}

CliqueGame RobustUniqueNeGame(const Graph& graph,
                              const ParameterRegime& regime) {
  const int n = graph.num_vertices();
  if (regime.n != n) {
    throw InvalidArgument("regime n differs from the graph's vertex count");
  }
  if (regime.k < 1) throw InvalidArgument("clique size must be positive");
  if (regime.epsilon < 0) throw InvalidArgument("negative epsilon");
  const int k = regime.k;
  const Rational& delta = regime.delta;
  Rational corner = 1 - Fraction(1, k) + delta / k;
  Rational border = corner -
                    delta / (Rational(n) * n * Power(Rational(k), 4)) +
                    3 * regime.epsilon;
  RationalMatrix b =
      Bordered(PayoffFromGraphDelta(graph, delta), border, corner);
  BimatrixGame game = BimatrixGame::SymmetricIdentical(b);
  return {graph,  k,      CliqueGameVariant::kRobust, regime,
          corner, border, std::move(b),               std::move(game)};
}

ExactStrategy CliqueUniform(const Graph& graph, std::span<const int> clique) {
  if (clique.empty()) throw InvalidArgument("empty clique");
  const int n = graph.num_vertices();
  for (int v : clique) {
    if (v < 0 || v >= n) throw InvalidArgument("clique vertex out of range");
  }
  if (!graph.IsClique(clique)) throw InvalidArgument("vertex set is not a clique");
  std::vector<Rational> x(n);
  const Rational w = Fraction(1, static_cast<long>(clique.size()));
  for (int v : clique) x[v] = w;
  return ExactStrategy(std::move(x));
}

NashgapReport NashgapAudit(const Graph& graph, int cap) {
  const int n = graph.num_vertices();
  if (n > cap) throw SizeError("graph exceeds the Nash-gap audit cap");
  const RationalMatrix a = PayoffFromGraph(graph);
  const BimatrixGame game = BimatrixGame::SymmetricIdentical(a);
  NashgapReport report;
  report.k = MaxClique(graph).size;
  report.clique_value = Fraction(-1, report.k);
  if (report.k >= 2) report.other_bound = Fraction(-1, report.k - 1);

  std::vector<ExactStrategy> clique_forms;
  for (const auto& clique : CliquesOfSize(graph, report.k)) {
    ExactStrategy x = CliqueUniform(graph, clique);
    if (ExactMaxRegret(game, {x, x}) != 0) {
      throw LemmaViolation("maximum-clique uniform profile is not a NE");
    }
    if (QuadraticValue(a, x.probs()) != report.clique_value) {
      throw LemmaViolation("maximum-clique uniform profile is not worth -1/k");
    }
    clique_forms.push_back(std::move(x));
  }
  report.max_cliques = static_cast<int>(clique_forms.size());

  const SymmetricEnumeration found = SymmetricSupportEnumeration(a);
  report.equilibria = static_cast<int>(found.equilibria.size());
  report.singular_supports = found.singular_supports;
  if (found.equilibria.empty()) {
    throw LemmaViolation("no symmetric equilibrium enumerated");
  }
  report.max_value = found.equilibria.front().value;
  for (const auto& eq : found.equilibria) {
    report.max_value = std::max(report.max_value, eq.value);
    const bool clique_form =
        std::find(clique_forms.begin(), clique_forms.end(), eq.strategy) !=
        clique_forms.end();
    if (clique_form) continue;
    KeepMax(report.max_other_value, eq.value);
    if (report.k >= 2 && eq.value > report.other_bound) {
      throw LemmaViolation("non-clique equilibrium worth more than -1/(k-1)");
    }
  }
  if (report.max_value != report.clique_value) {
    throw LemmaViolation("best symmetric equilibrium is not worth -1/k");
  }
  return report;
}

WsneValueReport WsneValueAudit(const Graph& graph,
                               const ParameterRegime& regime,
                               int resolution) {
  const int n = graph.num_vertices();
  if (regime.n != n) {
    throw InvalidArgument("regime n differs from the graph's vertex count");
  }
  if (n > kSupportEnumerationCap) {
    throw SizeError("graph exceeds the support-enumeration cap");
  }
  if (regime.epsilon < 0) throw InvalidArgument("negative epsilon");
  const Rational& delta = regime.delta;
  const RationalMatrix a = PayoffFromGraphDelta(graph, delta);
  const BimatrixGame game = BimatrixGame::SymmetricIdentical(a);

  WsneValueReport report;
  report.k = MaxClique(graph).size;
  report.strict_regime = regime.strict();
  if (regime.k != report.k) {
    throw InvalidArgument("regime k differs from the maximum clique size");
  }
  const int k = report.k;
  const std::vector<std::vector<int>> max_cliques = CliquesOfSize(graph, k);
  const Rational clique_value = 1 - Fraction(1, k) + delta / k;
  const Rational closeness = (k - delta) / (1 - delta);
  const Rational separation =
      2 * delta / (Rational(n) * n * Power(Rational(k), 4));

  auto check = [&](const ExactStrategy& x) {
    const Rational eps_c = ExactWsneReport(game, x);
    if (eps_c > regime.epsilon) return;
    ++report.candidates;
    const Rational value = QuadraticValue(a, x.probs());
    const std::vector<int> support = Support(x.probs());
    bool exact_k_clique = false;
    for (const auto& clique : max_cliques) {
      if (!IsSubset(support, clique)) continue;
      exact_k_clique = exact_k_clique || support == clique;
      ++report.clique_supported;
      const Rational value_margin = value - (clique_value - closeness * eps_c);
      const Rational distance_margin =
          closeness * eps_c -
          LinfDistanceExact(x.probs(), CliqueUniform(graph, clique).probs());
      if (value_margin < 0 || distance_margin < 0) {
        throw LemmaViolation("clique-supported WSNE breaks its value bound at " +
                             FormatRational(eps_c));
      }
      KeepMin(report.clique_value_margin, value_margin);
      KeepMin(report.clique_distance_margin, distance_margin);
      KeepMax(report.max_clique_value, value);
    }
    if (exact_k_clique) return;
    ++report.other_supported;
    const Rational margin = clique_value - separation + 2 * eps_c - value;
    if (margin < 0) {
      throw LemmaViolation("WSNE off the maximum cliques breaks its value "
                           "bound at " + FormatRational(eps_c));
    }
    KeepMin(report.other_value_margin, margin);
    KeepMax(report.max_other_value, value);
  };

  SimplexGrid grid(n, resolution, kWsneGridCap);
  do {
    check(grid.exact_point());
  } while (grid.Next());

  const Rational& eps = regime.epsilon;
  const std::vector<Rational> steps = {eps / 4, eps / 2, eps};
  for (const auto& eq : SymmetricSupportEnumeration(a).equilibria) {
    check(eq.strategy);
    const auto probs = eq.strategy.probs();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const Rational& t : steps) {
          if (t <= 0 || probs[i] < t) continue;
          std::vector<Rational> moved(probs.begin(), probs.end());
          moved[i] -= t;
          moved[j] += t;
          check(ExactStrategy(std::move(moved)));
        }
      }
    }
  }
  return report;
}

std::vector<int> FindNonadjacentCover(const Graph& graph, int k) {
  const int n = graph.num_vertices();
  std::vector<int> cover;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !graph.adjacent(i, j)) {
        cover.push_back(i);
        break;
      }
    }
  }
  if (cover.empty()) {
    throw InvalidArgument("cover impossible: every pair of vertices is joined");
  }
  if (static_cast<int>(cover.size()) < n - k + 1) {
    throw LemmaViolation("non-adjacent cover smaller than n - k + 1");
  }
  for (int i : cover) {
    const bool has_partner = std::any_of(cover.begin(), cover.end(), [&](int j) {
      return i != j && !graph.adjacent(i, j);
    });
    if (!has_partner) throw LemmaViolation("cover vertex lacks a partner");
  }
  return cover;
}

std::string_view CanonicalFormName(CanonicalForm form) {
  switch (form) {
    case CanonicalForm::kTrivialLast: return "TrivialLast";
    case CanonicalForm::kCliqueUniform: return "CliqueUniform";
    case CanonicalForm::kHalfMix: return "HalfMix";
    case CanonicalForm::kOther: return "Other";
  }
  return "Other";
}

Classification ClassifySymmetricProfile(const CliqueGame& game,
                                        const MixedStrategy& x_hat,
                                        double epsilon,
                                        ApproximationKind kind) {
  const int n = game.graph.num_vertices();
  if (x_hat.size() != n + 1) {
    throw DimensionError("profile size does not match the clique game");
  }
  if (epsilon < 0) throw InvalidArgument("negative epsilon");
  const bool certified =
      kind == ApproximationKind::kNash
          ? EpsilonNeReport(game.game, {x_hat, x_hat}, epsilon).satisfied
          : WsneReport(game.game, x_hat) <= epsilon + kCertificateSlack;
  if (!certified) {
    throw PreconditionError("profile is not a symmetric approximate NE");
  }

  Classification out;
  out.form = CanonicalForm::kTrivialLast;
  out.distance = LinfDistance(x_hat.probs(), BorderedForm(n, {}, 0.0));
  for (const auto& clique : CliquesOfSize(game.graph, game.k)) {
    const std::pair<CanonicalForm, double> forms[] = {
        {CanonicalForm::kCliqueUniform, 1.0}, {CanonicalForm::kHalfMix, 0.5}};
    for (const auto& [form, weight] : forms) {
      const double d =
          LinfDistance(x_hat.probs(), BorderedForm(n, clique, weight));
      if (d < out.distance || (d == out.distance && form < out.form)) {
        out.form = form;
        out.distance = d;
        out.clique = clique;
      }
    }
  }
  const double n6 = std::pow(static_cast<double>(n), 6);
  out.bound = kind == ApproximationKind::kNash ? n6 * std::sqrt(epsilon)
                                               : 2.0 * n6 * epsilon;
  out.asserted = game.regime.has_value() && game.regime->strict();
  if (out.distance > out.bound + kClassifySlack) {
    if (out.asserted) {
      throw LemmaViolation("approximate NE far from every canonical form");
    }
    out.form = CanonicalForm::kOther;
  }
  return out;
}

QuadraticMinMaxProblem NonsymInstance(const Graph& graph,
                                      const ParameterRegime& regime) {
  const CliqueGame robust = RobustUniqueNeGame(graph, regime);
  const RationalMatrix q = Rational(2) * robust.matrix;
  const int dim = q.rows();
  return QuadraticMinMaxProblem(q, q, RationalMatrix(dim, dim),
                                SimplexProduct{dim, dim});
}

}  // namespace symgames
