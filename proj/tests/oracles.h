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


// Slow, direct reference computations used to cross-check the library.
// Nothing here calls the library's payoff, projection or solver code.

#ifndef SYMGAMES_TESTS_ORACLES_H_
#define SYMGAMES_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "symgames/game.h"
#include "symgames/graph.h"

namespace symgames::testing {

// Payoff of `player` at a pure profile, read straight off the game's data.
inline double PurePayoff(const Game& game, const std::vector<int>& a,
                         int player) {
  if (const auto* b = dynamic_cast<const BimatrixGame*>(&game)) {
    const auto& m = player == 0 ? b->row_payoffs() : b->col_payoffs();
    return ToDouble(m(a[0], a[1]));
  }
  if (const auto* p = dynamic_cast<const PolymatrixGame*>(&game)) {
    double u = 0.0;
    for (const auto& t : p->terms()) {
      if (p->shared_payoff() || t.row_player == player) {
        u += ToDouble(t.matrix(a[t.row_player], a[t.col_player]));
      }
    }
    return u;
  }
  const auto& n = dynamic_cast<const NormalFormGame&>(game);
  std::int64_t index = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    index = index * game.num_actions(i) + a[i];
  }
  return ToDouble(n.payoffs(player)[index]);
}

// Expected payoff by summing over every pure profile.
inline double BruteUtility(const Game& game, const MixedProfile& profile,
                           int player) {
  const int players = game.num_players();
  std::vector<int> a(players, 0);
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int i = 0; i < players; ++i) weight *= profile[i][a[i]];
    if (weight != 0.0) total += weight * PurePayoff(game, a, player);
    int i = players - 1;
    while (i >= 0 && ++a[i] == game.num_actions(i)) a[i--] = 0;
    if (i < 0) break;
  }
  return total;
}

inline double BruteRegret(const Game& game, const MixedProfile& profile,
                          int player) {
  const double sign =
      game.orientation(player) == Orientation::kMaximize ? 1.0 : -1.0;
  const double current = BruteUtility(game, profile, player);
  double best = 0.0;
  for (int a = 0; a < game.num_actions(player); ++a) {
    MixedProfile deviated = profile;
    deviated[player] = MixedStrategy::Pure(game.num_actions(player), a);
    best = std::max(best, sign * (BruteUtility(game, deviated, player) - current));
  }
  return best;
}

inline double BruteMaxRegret(const Game& game, const MixedProfile& profile) {
  double worst = 0.0;
  for (int p = 0; p < game.num_players(); ++p) {
    worst = std::max(worst, BruteRegret(game, profile, p));
  }
  return worst;
}

// Simplex projection by bisection on the threshold τ of Σ max(v − τ, 0) = 1.
inline std::vector<double> BisectionProjection(const std::vector<double>& v) {
  double lo = *std::min_element(v.begin(), v.end()) - 1.0;
  double hi = *std::max_element(v.begin(), v.end());
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    double s = 0.0;
    for (double e : v) s += std::max(e - mid, 0.0);
    (s > 1.0 ? lo : hi) = mid;
  }
  std::vector<double> out;
  for (double e : v) out.push_back(std::max(e - 0.5 * (lo + hi), 0.0));
  return out;
}

// Minimizer of a convex function on [0, 1] by ternary search.
inline double TernaryArgmin(const std::function<double(double)>& f) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 300; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

struct ZeroSumSolution {
  double value;
  double row1;  // minimizer's weight on row 1
  double col1;  // maximizer's weight on column 1
};

// min_x max_z ⟨x, Az⟩ for 2×2 A, solved by searching each player's
// one-dimensional security level.
inline ZeroSumSolution Search2x2(const RealMatrix& a) {
  const auto worst_case = [&](double p) {
    return std::max(p * a(0, 0) + (1 - p) * a(1, 0),
                    p * a(0, 1) + (1 - p) * a(1, 1));
  };
  const auto guarantee = [&](double q) {
    return -std::min(q * a(0, 0) + (1 - q) * a(0, 1),
                     q * a(1, 0) + (1 - q) * a(1, 1));
  };
  const double p = TernaryArgmin(worst_case);
  const double q = TernaryArgmin(guarantee);
  return {worst_case(p), p, q};
}

inline int BruteMaxClique(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(i);
    }
    if (static_cast<int>(s.size()) > best && g.IsClique(s)) {
      best = static_cast<int>(s.size());
    }
  }
  return best;
}

inline std::vector<double> CentralDifference(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> at, double h = 1e-6) {
  std::vector<double> g(at.size());
  for (std::size_t i = 0; i < at.size(); ++i) {
    const double saved = at[i];
    at[i] = saved + h;
    const double up = f(at);
    at[i] = saved - h;
    const double down = f(at);
    at[i] = saved;
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

inline RationalMatrix RandomMatrix(int rows, int cols, int lo, int hi,
                                   int denominator, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Fraction(d(rng), denominator);
  }
  return m;
}

inline RationalMatrix RandomSymmetricMatrix(int n, int lo, int hi,
                                            int denominator,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = Fraction(d(rng), denominator);
  }
  return m;
}

// Exact Gaussian elimination with row pivoting; nullopt when singular.
inline std::optional<std::vector<Rational>> GaussSolve(
    std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[c], m[pivot]);
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int r = 0; r < n; ++r) b[r] /= m[r][r];
  return b;
}

// An exact equilibrium of a six-player team polymatrix game in which player
// p + 3 copies player p, found by support enumeration over the first team.
// With the copies in place every payoff vector of the first team is linear
// in its own strategies; constants from terms a player is not part of are
// dropped since they shift every action alike.
inline std::optional<ExactProfile> MirroredTeamEquilibrium(
    const PolymatrixGame& game) {
  const int n[3] = {game.num_actions(0), game.num_actions(1),
                    game.num_actions(2)};
  const int offset[3] = {0, n[0], n[0] + n[1]};
  const int total = n[0] + n[1] + n[2];
  // linear[p](i, column of the stacked strategy vector)
  std::vector<RationalMatrix> linear;
  for (int p = 0; p < 3; ++p) {
    RationalMatrix l(n[p], total);
    for (const PairwiseTerm& t : game.terms()) {
      if (t.row_player == p) {
        const int q = t.col_player % 3;
        for (int i = 0; i < n[p]; ++i) {
          for (int j = 0; j < n[q]; ++j) l(i, offset[q] + j) += t.matrix(i, j);
        }
      }
      if (t.col_player == p) {
        const int q = t.row_player % 3;
        for (int i = 0; i < n[p]; ++i) {
          for (int j = 0; j < n[q]; ++j) l(i, offset[q] + j) += t.matrix(j, i);
        }
      }
    }
    linear.push_back(std::move(l));
  }
  for (unsigned m0 = 1; m0 < (1u << n[0]); ++m0) {
    for (unsigned m1 = 1; m1 < (1u << n[1]); ++m1) {
      for (unsigned m2 = 1; m2 < (1u << n[2]); ++m2) {
        const unsigned masks[3] = {m0, m1, m2};
        std::vector<int> columns;
        for (int p = 0; p < 3; ++p) {
          for (int i = 0; i < n[p]; ++i) {
            if (masks[p] >> i & 1u) columns.push_back(offset[p] + i);
          }
        }
        const int k = static_cast<int>(columns.size());
        std::vector<std::vector<Rational>> sys(k + 3,
                                               std::vector<Rational>(k + 3));
        std::vector<Rational> rhs(k + 3);
        int row = 0;
        for (int p = 0; p < 3; ++p) {
          for (int i = 0; i < n[p]; ++i) {
            if (!(masks[p] >> i & 1u)) continue;
            for (int c = 0; c < k; ++c) sys[row][c] = linear[p](i, columns[c]);
            sys[row][k + p] = -1;
            ++row;
          }
        }
        for (int p = 0; p < 3; ++p) {
          for (int c = 0; c < k; ++c) {
            if (columns[c] >= offset[p] && columns[c] < offset[p] + n[p]) {
              sys[k + p][c] = 1;
            }
          }
          rhs[k + p] = 1;
        }
        const auto sol = GaussSolve(std::move(sys), std::move(rhs));
        if (!sol) continue;
        std::vector<Rational> stacked(total);
        bool ok = true;
        for (int c = 0; c < k; ++c) {
          ok = ok && (*sol)[c] >= 0;
          stacked[columns[c]] = (*sol)[c];
        }
        for (int p = 0; p < 3 && ok; ++p) {
          const Rational sign = game.orientation(p) == Orientation::kMinimize ? 1 : -1;
          for (int i = 0; i < n[p] && ok; ++i) {
            Rational v = 0;
            for (int c = 0; c < total; ++c) v += linear[p](i, c) * stacked[c];
            ok = sign * (v - (*sol)[k + p]) >= 0;
          }
        }
        if (!ok) continue;
        ExactProfile out;
        for (int copy = 0; copy < 2; ++copy) {
          for (int p = 0; p < 3; ++p) {
            out.emplace_back(std::vector<Rational>(
                stacked.begin() + offset[p], stacked.begin() + offset[p] + n[p]));
          }
        }
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace symgames::testing

#endif  // SYMGAMES_TESTS_ORACLES_H_
