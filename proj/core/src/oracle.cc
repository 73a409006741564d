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

#include "symgames/oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "symgames/geometry.h"

namespace symgames {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> AdjacencyMasks(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n > kMaxCliqueVertexCap) {
    throw SizeError("clique oracle supports at most " +
                    std::to_string(kMaxCliqueVertexCap) + " vertices");
  }
  std::vector<Mask> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph.adjacent(i, j)) adj[i] |= Mask{1} << j;
    }
  }
  return adj;
}

std::vector<int> MaskToVertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

void ExpandClique(const std::vector<Mask>& adj, Mask current, Mask candidates,
                  Mask& best) {
  if (candidates == 0) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    return;
  }
  while (candidates) {
    if (std::popcount(current) + std::popcount(candidates) <=
        std::popcount(best)) {
      return;
    }
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    ExpandClique(adj, current | (Mask{1} << v), candidates & adj[v], best);
  }
  if (std::popcount(current) > std::popcount(best)) best = current;
}

void CollectCliques(const std::vector<Mask>& adj, Mask current,
                    Mask candidates, int remaining,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(MaskToVertices(current));
    return;
  }
  while (candidates && std::popcount(candidates) >= remaining) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    CollectCliques(adj, current | (Mask{1} << v), candidates & adj[v],
                   remaining - 1, out);
  }
}

// Payoffs as seen by a maximizer.
RationalMatrix Oriented(const RationalMatrix& m, Orientation orientation) {
  return orientation == Orientation::kMaximize ? m : -m;
}

// Mixed strategy over `support` (size s) of the opponent that makes the
// player with payoff matrix `payoff` (own actions as rows) indifferent
// across `own`; returns the weights followed by the common payoff.
std::optional<std::vector<Rational>> Indifference(
    const RationalMatrix& payoff, const std::vector<int>& own,
    const std::vector<int>& support) {
  const int s = static_cast<int>(support.size());
  RationalMatrix system(s + 1, s + 1);
  std::vector<Rational> rhs(s + 1);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) system(r, c) = payoff(own[r], support[c]);
    system(r, s) = -1;
  }
  for (int c = 0; c < s; ++c) system(s, c) = 1;
  rhs[s] = 1;
  return SolveLinearSystem(std::move(system), std::move(rhs));
}

}  // namespace

std::optional<std::vector<Rational>> SolveLinearSystem(RationalMatrix a,
                                                       std::vector<Rational> b) {
  const int n = a.rows();
  if (!a.square() || static_cast<int>(b.size()) != n) {
    throw DimensionError("linear system must be square");
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int r = n - 1; r >= 0; --r) {
    Rational acc = b[r];
    for (int j = r + 1; j < n; ++j) acc -= a(r, j) * x[j];
    x[r] = acc / a(r, r);
  }
  return x;
}

CliqueResult MaxClique(const Graph& graph) {
  const auto adj = AdjacencyMasks(graph);
  const int n = graph.num_vertices();
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask best = 0;
  ExpandClique(adj, 0, all, best);
  CliqueResult result{std::popcount(best), MaskToVertices(best)};
  if (!graph.IsClique(result.vertices) || result.size == 0) {
    throw LemmaViolation("max-clique witness failed verification");
  }
  return result;
}

std::vector<std::vector<int>> CliquesOfSize(const Graph& graph, int size) {
  const auto adj = AdjacencyMasks(graph);
  const int n = graph.num_vertices();
  std::vector<std::vector<int>> out;
  if (size <= 0 || size > n) return out;
  CollectCliques(adj, 0, (Mask{1} << n) - 1, size, out);
  return out;
}

SymmetricEnumeration SymmetricSupportEnumeration(const RationalMatrix& a,
                                                 Orientation orientation) {
  if (!a.square()) throw DimensionError("symmetric game needs a square matrix");
  const int n = a.rows();
  if (n > kSupportEnumerationCap) {
    throw SizeError("support enumeration supports at most " +
                    std::to_string(kSupportEnumerationCap) + " actions");
  }
  const RationalMatrix payoff = Oriented(a, orientation);
  SymmetricEnumeration result;
  std::set<std::vector<Rational>> seen;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    const std::vector<int> support = MaskToVertices(mask);
    const auto solution = Indifference(payoff, support, support);
    if (!solution) {
      ++result.singular_supports;
      continue;
    }
    const int s = static_cast<int>(support.size());
    std::vector<Rational> x(n);
    bool feasible = true;
    for (int c = 0; c < s && feasible; ++c) {
      if ((*solution)[c] <= 0) feasible = false;
      x[support[c]] = (*solution)[c];
    }
    if (!feasible) continue;
    const Rational& value = (*solution)[s];
    const std::vector<Rational> payoffs = Multiply(payoff, x);
    for (int i = 0; i < n && feasible; ++i) {
      if (!(mask >> i & 1) && payoffs[i] > value) feasible = false;
    }
    if (!feasible || !seen.insert(x).second) continue;
    const Rational true_value =
        orientation == Orientation::kMaximize ? value : Rational(-value);
    result.equilibria.push_back({ExactStrategy(std::move(x)), true_value});
  }
  return result;
}

BimatrixEnumeration BimatrixSupportEnumeration(const BimatrixGame& game) {
  const int rows = game.num_actions(0);
  const int cols = game.num_actions(1);
  if (rows > kSupportEnumerationCap || cols > kSupportEnumerationCap) {
    throw SizeError("support enumeration supports at most " +
                    std::to_string(kSupportEnumerationCap) + " actions");
  }
  const RationalMatrix r = Oriented(game.row_payoffs(), game.orientation(0));
  const RationalMatrix ct =
      Oriented(game.col_payoffs(), game.orientation(1)).Transposed();
  BimatrixEnumeration result;
  for (Mask rm = 1; rm < (Mask{1} << rows); ++rm) {
    const std::vector<int> row_support = MaskToVertices(rm);
    const int s = static_cast<int>(row_support.size());
    for (Mask cm = 1; cm < (Mask{1} << cols); ++cm) {
      if (std::popcount(cm) != s) continue;
      const std::vector<int> col_support = MaskToVertices(cm);
      const auto y = Indifference(r, row_support, col_support);
      const auto x = Indifference(ct, col_support, row_support);
      if (!y || !x) {
        ++result.singular_supports;
        continue;
      }
      std::vector<Rational> xs(rows), ys(cols);
      bool ok = true;
      for (int c = 0; c < s && ok; ++c) {
        if ((*x)[c] <= 0 || (*y)[c] <= 0) ok = false;
        xs[row_support[c]] = (*x)[c];
        ys[col_support[c]] = (*y)[c];
      }
      if (!ok) continue;
      const auto row_payoffs = Multiply(r, ys);
      const auto col_payoffs = Multiply(ct, xs);
      for (int i = 0; i < rows && ok; ++i) {
        if (row_payoffs[i] > (*y)[s]) ok = false;
      }
      for (int j = 0; j < cols && ok; ++j) {
        if (col_payoffs[j] > (*x)[s]) ok = false;
      }
      if (!ok) continue;
      const Rational row_value = game.orientation(0) == Orientation::kMaximize
                                     ? (*y)[s]
                                     : Rational(-(*y)[s]);
      const Rational col_value = game.orientation(1) == Orientation::kMaximize
                                     ? (*x)[s]
                                     : Rational(-(*x)[s]);
      result.equilibria.push_back({ExactStrategy(std::move(xs)),
                                   ExactStrategy(std::move(ys)), row_value,
                                   col_value});
    }
  }
  return result;
}

std::vector<GridHit> GridNeSearch(const Game& game, int resolution, double eps,
                                  std::int64_t cap, int threads) {
  if (!(eps >= 0.0)) throw InvalidArgument("eps must be ≥ 0");
  const int players = game.num_players();
  std::int64_t total = 1;
  for (int p = 0; p < players; ++p) {
    const std::int64_t size = SimplexGridSize(game.num_actions(p), resolution);
    if (size < 0 || size > cap) throw SizeError("grid too large");
    total *= size;
    if (total > cap) {
      throw SizeError("product grid exceeds the cap of " + std::to_string(cap) +
                      " profiles");
    }
  }
  std::vector<MixedStrategy> first_points;
  {
    SimplexGrid grid(game.num_actions(0), resolution, cap);
    do {
      first_points.push_back(grid.point());
    } while (grid.Next());
  }
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, static_cast<int>(first_points.size()));

  std::vector<std::vector<GridHit>> shard_hits(first_points.size());
  auto scan_shard = [&](std::size_t shard) {
    std::vector<SimplexGrid> grids;
    for (int p = 1; p < players; ++p) {
      grids.emplace_back(game.num_actions(p), resolution, cap);
    }
    MixedProfile profile;
    profile.push_back(first_points[shard]);
    for (const auto& g : grids) profile.push_back(g.point());
    while (true) {
      const double regret = MaxRegret(game, profile);
      if (regret <= eps + kCertificateSlack) {
        shard_hits[shard].push_back({profile, regret});
      }
      int q = players - 1;
      while (q >= 1) {
        SimplexGrid& g = grids[q - 1];
        if (g.Next()) {
          profile[q] = g.point();
          break;
        }
        g.Reset();
        profile[q] = g.point();
        --q;
      }
      if (q < 1) break;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < first_points.size(); s += workers) {
          scan_shard(s);
        }
      });
    }
  }
  std::vector<GridHit> hits;
  for (auto& shard : shard_hits) {
    for (auto& h : shard) hits.push_back(std::move(h));
  }
  return hits;
}

namespace {

// Pure-action payoffs of a polymatrix player are Σ_q B_pq x_q plus a
// constant, so fixing every support turns the equilibrium conditions into
// one square linear system in (x, v).
std::optional<MixedProfile> SolveOnSupports(
    const PolymatrixGame& game, const std::vector<std::vector<int>>& supports) {
  const int players = game.num_players();
  std::vector<std::vector<std::pair<int, RealMatrix>>> blocks(players);
  for (const PairwiseTerm& term : game.terms()) {
    blocks[term.row_player].emplace_back(term.col_player, ToReal(term.matrix));
    if (game.shared_payoff()) {
      blocks[term.col_player].emplace_back(term.row_player,
                                           ToReal(term.matrix.Transposed()));
    }
  }
  std::vector<int> offset(players + 1, 0);
  for (int p = 0; p < players; ++p) {
    if (supports[p].empty()) return std::nullopt;
    offset[p + 1] = offset[p] + static_cast<int>(supports[p].size());
  }
  const int vars = offset[players] + players;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(vars, vars);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(vars);
  int row = 0;
  for (int p = 0; p < players; ++p) {
    for (int i : supports[p]) {
      for (const auto& [q, b] : blocks[p]) {
        for (std::size_t k = 0; k < supports[q].size(); ++k) {
          m(row, offset[q] + static_cast<int>(k)) += b(i, supports[q][k]);
        }
      }
      m(row, offset[players] + p) = -1.0;
      ++row;
    }
  }
  for (int p = 0; p < players; ++p) {
    for (int k = offset[p]; k < offset[p + 1]; ++k) m(row, k) = 1.0;
    rhs(row++) = 1.0;
  }
  // Minimum-norm solution, so degenerate supports still yield a candidate.
  const Eigen::VectorXd sol =
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(m).solve(rhs);
  if (!sol.allFinite() || (m * sol - rhs).cwiseAbs().maxCoeff() > 1e-9) {
    return std::nullopt;
  }
  MixedProfile out;
  for (int p = 0; p < players; ++p) {
    std::vector<double> x(game.num_actions(p), 0.0);
    for (std::size_t k = 0; k < supports[p].size(); ++k) {
      const double v = sol(offset[p] + static_cast<int>(k));
      if (v < -1e-9) return std::nullopt;
      x[supports[p][k]] = std::max(v, 0.0);
    }
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v /= total;
    out.emplace_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<int>> SupportsAbove(const MixedProfile& profile,
                                            double threshold) {
  std::vector<std::vector<int>> supports;
  for (const MixedStrategy& s : profile) {
    std::vector<int> support;
    for (int i = 0; i < s.size(); ++i) {
      if (s[i] > threshold) support.push_back(i);
    }
    supports.push_back(std::move(support));
  }
  return supports;
}

// Tries every combination of nonempty sub-supports of `outer` (when there
// are at most `cap` of them, else only `outer` itself) and reports the
// solutions to `consider`.
template <typename Consider>
void PolishAround(const PolymatrixGame& game,
                  const std::vector<std::vector<int>>& outer, std::int64_t cap,
                  Consider&& consider) {
  const int players = game.num_players();
  std::int64_t combos = 1;
  for (const auto& t : outer) {
    if (t.empty() || t.size() > 20) return;
    combos *= (std::int64_t{1} << t.size()) - 1;
    if (combos > cap) break;
  }
  if (combos > cap) {
    if (auto solved = SolveOnSupports(game, outer)) consider(*solved);
    return;
  }
  std::vector<Mask> masks(players, 1);
  std::vector<std::vector<int>> supports(players);
  while (true) {
    for (int p = 0; p < players; ++p) {
      supports[p].clear();
      for (std::size_t k = 0; k < outer[p].size(); ++k) {
        if (masks[p] >> k & 1) supports[p].push_back(outer[p][k]);
      }
    }
    if (auto solved = SolveOnSupports(game, supports)) consider(*solved);
    int p = players - 1;
    for (; p >= 0; --p) {
      if (++masks[p] < (Mask{1} << outer[p].size())) break;
      masks[p] = 1;
    }
    if (p < 0) break;
  }
}

}  // namespace

RefineResult LocalNeRefine(const Game& game, MixedProfile start,
                           double target_regret, const RefineOptions& options) {
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw InvalidArgument("damping must lie in (0, 1]");
  }
  if (options.polish_interval < 0) {
    throw InvalidArgument("polish interval must be non-negative");
  }
  game.CheckProfile(start);
  const auto* polymatrix = dynamic_cast<const PolymatrixGame*>(&game);
  const int players = game.num_players();
  MixedProfile current = std::move(start);
  // Running sum of the iterates since the last polish.
  std::vector<std::vector<double>> window(players);
  for (int p = 0; p < players; ++p) window[p].assign(current[p].size(), 0.0);
  int window_length = 0;

  RefineResult result;
  result.damping = options.damping;
  double best_regret = std::numeric_limits<double>::infinity();
  auto consider = [&](const MixedProfile& candidate) {
    const double regret = MaxRegret(game, candidate);
    if (regret < best_regret) {
      best_regret = regret;
      result.profile = candidate;
    }
  };
  for (int it = 0;; ++it) {
    std::vector<int> responses(players);
    double worst = 0.0;
    for (int p = 0; p < players; ++p) {
      const Deviation d = BestDeviation(game, current, p);
      responses[p] = d.action;
      worst = std::max(worst, d.gain);
    }
    if (worst < best_regret) {
      best_regret = worst;
      result.profile = current;
    }
    result.iterations = it;
    if (best_regret <= target_regret || it >= options.max_iterations) break;

    for (int p = 0; p < players; ++p) {
      for (int i = 0; i < current[p].size(); ++i) window[p][i] += current[p][i];
    }
    ++window_length;
    if (polymatrix != nullptr && options.polish_interval > 0 &&
        window_length == options.polish_interval) {
      MixedProfile average;
      for (int p = 0; p < players; ++p) {
        std::vector<double> avg(window[p]);
        for (double& v : avg) v /= window_length;
        average.emplace_back(std::move(avg));
        std::fill(window[p].begin(), window[p].end(), 0.0);
      }
      window_length = 0;
      std::vector<std::vector<int>> outer =
          SupportsAbove(average, options.support_threshold);
      for (int p = 0; p < players; ++p) {
        if (!std::count(outer[p].begin(), outer[p].end(), responses[p])) {
          outer[p].push_back(responses[p]);
          std::sort(outer[p].begin(), outer[p].end());
        }
      }
      PolishAround(*polymatrix, outer, options.max_polish_systems, consider);
      if (best_regret <= target_regret) break;
    }

    for (int p = 0; p < players; ++p) {
      std::vector<double> next(current[p].values());
      for (double& v : next) v *= 1.0 - options.damping;
      next[responses[p]] += options.damping;
      current[p] = MixedStrategy(std::move(next));
    }
  }
  result.certificate =
      EpsilonNeReport(game, result.profile, target_regret, "local-refine");
  result.converged = result.certificate.satisfied;
  return result;
}

SearchResult LocalNeSearch(const Game& game, double target_regret,
                           const SearchOptions& options) {
  if (options.restarts < 1) throw InvalidArgument("restarts must be ≥ 1");
  std::mt19937_64 rng(options.seed);
  SearchResult result;
  for (int attempt = 0; attempt < options.restarts; ++attempt) {
    MixedProfile start;
    for (int p = 0; p < game.num_players(); ++p) {
      start.push_back(RandomSimplexPoint(game.num_actions(p), rng));
    }
    RefineResult run =
        LocalNeRefine(game, std::move(start), target_regret, options.refine);
    result.attempts = attempt + 1;
    const bool better =
        attempt == 0 || run.certificate.max_regret() <
                            result.best.certificate.max_regret();
    if (better) result.best = std::move(run);
    if (result.best.converged) break;
  }
  return result;
}

}  // namespace symgames
