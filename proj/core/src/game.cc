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

#include "symgames/game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace symgames {
namespace {

std::vector<double> Normalize(std::vector<double> w) {
  if (w.empty()) throw DimensionError("strategy over zero actions");
  double sum = 0.0;
  for (double& v : w) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite probability");
    if (v < -kClampTolerance) {
      throw InvalidArgument("negative probability " + std::to_string(v));
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(sum));
  }
  for (double& v : w) v /= sum;
  return w;
}

template <typename Profile>
void CheckProfileShape(const Game& game, const Profile& profile) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw DimensionError("profile has " + std::to_string(profile.size()) +
                         " strategies for a " +
                         std::to_string(game.num_players()) + "-player game");
  }
  for (int p = 0; p < game.num_players(); ++p) {
    if (profile[p].size() != game.num_actions(p)) {
      throw DimensionError("strategy of player " + std::to_string(p) +
                           " has the wrong length");
    }
  }
}

void CheckPlayer(const Game& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    throw DimensionError("player index out of range");
  }
}

}  // namespace

std::string_view OrientationName(Orientation orientation) {
  return orientation == Orientation::kMaximize ? "max" : "min";
}

Orientation ParseOrientation(std::string_view name) {
  if (name == "max" || name == "maximize") return Orientation::kMaximize;
  if (name == "min" || name == "minimize") return Orientation::kMinimize;
  throw InvalidArgument("unknown orientation '" + std::string(name) + "'");
}

MixedStrategy::MixedStrategy(std::vector<double> weights)
    : probs_(Normalize(std::move(weights))) {}

MixedStrategy MixedStrategy::Pure(int num_actions, int action) {
  if (action < 0 || action >= num_actions) {
    throw DimensionError("pure action out of range");
  }
  std::vector<double> w(num_actions, 0.0);
  w[action] = 1.0;
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  if (num_actions <= 0) throw DimensionError("strategy over zero actions");
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

ExactStrategy::ExactStrategy(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw DimensionError("strategy over zero actions");
  Rational sum;
  for (const auto& p : probs_) {
    if (p < 0) throw InvalidArgument("negative probability");
    sum += p;
  }
  if (sum != 1) throw InvalidArgument("probabilities do not sum to one");
}

ExactStrategy ExactStrategy::Pure(int num_actions, int action) {
  if (action < 0 || action >= num_actions) {
    throw DimensionError("pure action out of range");
  }
  std::vector<Rational> w(num_actions);
  w[action] = 1;
  return ExactStrategy(std::move(w));
}

ExactStrategy ExactStrategy::Uniform(int num_actions) {
  if (num_actions <= 0) throw DimensionError("strategy over zero actions");
  return ExactStrategy(
      std::vector<Rational>(num_actions, Fraction(1, num_actions)));
}

MixedStrategy ExactStrategy::ToMixed() const {
  return MixedStrategy(ToReal(probs_));
}

MixedProfile ToMixed(const ExactProfile& profile) {
  MixedProfile out;
  out.reserve(profile.size());
  for (const auto& s : profile) out.push_back(s.ToMixed());
  return out;
}

double LinfDistance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("distance size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

double L2Distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("distance size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

Game::Game(std::vector<int> action_counts, std::vector<Orientation> orientations,
           std::optional<TeamPartition> teams)
    : action_counts_(std::move(action_counts)),
      orientations_(std::move(orientations)),
      teams_(std::move(teams)) {
  if (action_counts_.empty()) throw DimensionError("game without players");
  for (int c : action_counts_) {
    if (c <= 0) throw DimensionError("player without actions");
  }
  if (orientations_.size() != action_counts_.size()) {
    throw DimensionError("one orientation per player is required");
  }
  if (!teams_) return;
  std::set<int> seen;
  for (const auto* team : {&teams_->first, &teams_->second}) {
    if (team->empty()) throw InvalidArgument("empty team");
    for (int p : *team) {
      if (p < 0 || p >= num_players()) {
        throw InvalidArgument("team member out of range");
      }
      if (!seen.insert(p).second) throw InvalidArgument("teams overlap");
    }
  }
  if (static_cast<int>(seen.size()) != num_players()) {
    throw InvalidArgument("teams must cover every player");
  }
  const Orientation first = orientations_[teams_->first.front()];
  const Orientation second = orientations_[teams_->second.front()];
  for (int p : teams_->first) {
    if (orientations_[p] != first) {
      throw InvalidArgument("team members must share an orientation");
    }
  }
  for (int p : teams_->second) {
    if (orientations_[p] != second) {
      throw InvalidArgument("team members must share an orientation");
    }
  }
  if (first == second) {
    throw InvalidArgument("opposing teams need opposite orientations");
  }
}

void Game::CheckProfile(const MixedProfile& profile) const {
  CheckProfileShape(*this, profile);
}

void Game::CheckProfile(const ExactProfile& profile) const {
  CheckProfileShape(*this, profile);
}

double EvaluateUtility(const Game& game, const MixedProfile& profile,
                       int player) {
  CheckPlayer(game, player);
  game.CheckProfile(profile);
  return Dot(profile[player].probs(), game.ActionPayoffs(profile, player));
}

Rational ExactUtility(const Game& game, const ExactProfile& profile,
                      int player) {
  CheckPlayer(game, player);
  game.CheckProfile(profile);
  return Dot(profile[player].probs(),
             game.ExactActionPayoffs(profile, player));
}

Deviation BestDeviation(const Game& game, const MixedProfile& profile,
                        int player) {
  CheckPlayer(game, player);
  game.CheckProfile(profile);
  const std::vector<double> payoffs = game.ActionPayoffs(profile, player);
  const double sign = Sign(game.orientation(player));
  const double current = sign * Dot(profile[player].probs(), payoffs);
  Deviation best{0, sign * payoffs[0] - current};
  for (int a = 1; a < static_cast<int>(payoffs.size()); ++a) {
    const double gain = sign * payoffs[a] - current;
    if (gain > best.gain) best = {a, gain};
  }
  return best;
}

double Regret(const Game& game, const MixedProfile& profile, int player) {
  return BestDeviation(game, profile, player).gain;
}

Rational ExactRegret(const Game& game, const ExactProfile& profile,
                     int player) {
  CheckPlayer(game, player);
  game.CheckProfile(profile);
  const std::vector<Rational> payoffs =
      game.ExactActionPayoffs(profile, player);
  const Rational current = Dot(profile[player].probs(), payoffs);
  const bool maximize = game.orientation(player) == Orientation::kMaximize;
  const Rational best = maximize
                            ? *std::max_element(payoffs.begin(), payoffs.end())
                            : *std::min_element(payoffs.begin(), payoffs.end());
  return maximize ? Rational(best - current) : Rational(current - best);
}

double MaxRegret(const Game& game, const MixedProfile& profile) {
  double worst = 0.0;
  for (int p = 0; p < game.num_players(); ++p) {
    worst = std::max(worst, Regret(game, profile, p));
  }
  return worst;
}

Rational ExactMaxRegret(const Game& game, const ExactProfile& profile) {
  Rational worst;
  for (int p = 0; p < game.num_players(); ++p) {
    worst = std::max(worst, ExactRegret(game, profile, p));
  }
  return worst;
}

BimatrixGame::BimatrixGame(RationalMatrix row_payoffs,
                           RationalMatrix col_payoffs,
                           std::vector<Orientation> orientations)
    : Game({row_payoffs.rows(), row_payoffs.cols()}, std::move(orientations),
           std::nullopt),
      row_(std::move(row_payoffs)),
      col_(std::move(col_payoffs)),
      row_real_(ToReal(row_)),
      col_real_(ToReal(col_)) {
  if (row_.rows() != col_.rows() || row_.cols() != col_.cols()) {
    throw DimensionError("R and C must have the same shape");
  }
}

BimatrixGame BimatrixGame::SymmetricIdentical(const RationalMatrix& a,
                                              Orientation orientation) {
  if (!IsSymmetric(a)) throw InvalidArgument("matrix is not symmetric");
  return BimatrixGame(a, a, {orientation, orientation});
}

BimatrixGame BimatrixGame::Symmetric(const RationalMatrix& r,
                                     Orientation orientation) {
  if (!r.square()) throw DimensionError("symmetric game needs a square R");
  return BimatrixGame(r, r.Transposed(), {orientation, orientation});
}

bool BimatrixGame::symmetric() const {
  return row_.square() && row_ == col_.Transposed() &&
         orientation(0) == orientation(1);
}

bool BimatrixGame::identical_payoff() const { return row_ == col_; }

std::vector<double> BimatrixGame::ActionPayoffs(const MixedProfile& profile,
                                                int player) const {
  CheckProfile(profile);
  if (player == 0) return Multiply(row_real_, profile[1].probs());
  if (player == 1) return MultiplyTransposed(col_real_, profile[0].probs());
  throw DimensionError("bimatrix player index out of range");
}

std::vector<Rational> BimatrixGame::ExactActionPayoffs(
    const ExactProfile& profile, int player) const {
  CheckProfile(profile);
  if (player == 0) return Multiply(row_, profile[1].probs());
  if (player == 1) return MultiplyTransposed(col_, profile[0].probs());
  throw DimensionError("bimatrix player index out of range");
}

PolymatrixGame::PolymatrixGame(std::vector<int> action_counts,
                               std::vector<Orientation> orientations,
                               std::vector<PairwiseTerm> terms,
                               std::optional<TeamPartition> teams)
    : Game(std::move(action_counts), std::move(orientations),
           std::move(teams)) {
  std::map<std::pair<int, int>, RationalMatrix> merged;
  for (auto& term : terms) {
    const int i = term.row_player;
    const int j = term.col_player;
    if (i < 0 || j < 0 || i >= num_players() || j >= num_players()) {
      throw DimensionError("pairwise term references an unknown player");
    }
    if (i == j) throw InvalidArgument("pairwise term on a single player");
    if (term.matrix.rows() != num_actions(i) ||
        term.matrix.cols() != num_actions(j)) {
      throw DimensionError("pairwise matrix (" + std::to_string(i) + "," +
                           std::to_string(j) + ") has the wrong shape");
    }
    auto [it, inserted] = merged.try_emplace({i, j}, term.matrix);
    if (!inserted) it->second = it->second + term.matrix;
  }
  for (auto& [key, matrix] : merged) {
    real_terms_.push_back(ToReal(matrix));
    terms_.push_back({key.first, key.second, std::move(matrix)});
  }
}

bool PolymatrixGame::Contributes(const PairwiseTerm& term, int player) const {
  return shared_payoff() || term.row_player == player;
}

std::vector<double> PolymatrixGame::ActionPayoffs(const MixedProfile& profile,
                                                  int player) const {
  CheckProfile(profile);
  CheckPlayer(*this, player);
  std::vector<double> out(num_actions(player), 0.0);
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const PairwiseTerm& term = terms_[t];
    if (!Contributes(term, player)) continue;
    const RealMatrix& m = real_terms_[t];
    if (term.row_player == player) {
      const auto v = Multiply(m, profile[term.col_player].probs());
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += v[a];
    } else if (term.col_player == player) {
      const auto v = MultiplyTransposed(m, profile[term.row_player].probs());
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += v[a];
    } else {
      const double c = Dot(profile[term.row_player].probs(),
                           Multiply(m, profile[term.col_player].probs()));
      for (double& v : out) v += c;
    }
  }
  return out;
}

std::vector<Rational> PolymatrixGame::ExactActionPayoffs(
    const ExactProfile& profile, int player) const {
  CheckProfile(profile);
  CheckPlayer(*this, player);
  std::vector<Rational> out(num_actions(player));
  for (const PairwiseTerm& term : terms_) {
    if (!Contributes(term, player)) continue;
    if (term.row_player == player) {
      const auto v = Multiply(term.matrix, profile[term.col_player].probs());
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += v[a];
    } else if (term.col_player == player) {
      const auto v =
          MultiplyTransposed(term.matrix, profile[term.row_player].probs());
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += v[a];
    } else {
      const Rational c =
          Dot(profile[term.row_player].probs(),
              Multiply(term.matrix, profile[term.col_player].probs()));
      for (auto& v : out) v += c;
    }
  }
  return out;
}

NormalFormGame::NormalFormGame(std::vector<int> action_counts,
                               std::vector<Orientation> orientations,
                               std::vector<std::vector<Rational>> payoffs,
                               std::optional<TeamPartition> teams)
    : Game(std::move(action_counts), std::move(orientations),
           std::move(teams)),
      payoffs_(std::move(payoffs)) {
  for (int c : this->action_counts()) {
    num_profiles_ *= c;
    if (num_profiles_ > kDefaultNormalFormCap) {
      throw SizeError("normal-form tensor too large");
    }
  }
  if (static_cast<int>(payoffs_.size()) != num_players()) {
    throw DimensionError("one payoff tensor per player is required");
  }
  for (const auto& tensor : payoffs_) {
    if (static_cast<std::int64_t>(tensor.size()) != num_profiles_) {
      throw DimensionError("payoff tensor extents do not match action counts");
    }
    real_payoffs_.push_back(ToReal(tensor));
  }
  if (const auto& teams = team_partition()) {
    const int a = teams->first.front();
    const int b = teams->second.front();
    for (const auto* team : {&teams->first, &teams->second}) {
      for (int p : *team) {
        if (payoffs_[p] != payoffs_[team->front()]) {
          throw InvalidArgument("team members must share payoffs");
        }
      }
    }
    // Opposite orientations: zero-sum means equal raw payoffs.
    if (payoffs_[a] != payoffs_[b]) {
      throw InvalidArgument("teams are not zero-sum");
    }
  }
}

std::int64_t NormalFormGame::FlatIndex(std::span<const int> actions) const {
  if (static_cast<int>(actions.size()) != num_players()) {
    throw DimensionError("pure profile has the wrong length");
  }
  std::int64_t index = 0;
  for (int p = 0; p < num_players(); ++p) {
    if (actions[p] < 0 || actions[p] >= num_actions(p)) {
      throw DimensionError("pure action out of range");
    }
    index = index * num_actions(p) + actions[p];
  }
  return index;
}

const Rational& NormalFormGame::Payoff(std::span<const int> actions,
                                       int player) const {
  return payoffs_.at(player)[FlatIndex(actions)];
}

namespace {

// Visits every pure profile with the product of the other players'
// probabilities; `weight_of(p, a)` gives player p's probability of action a.
template <typename T, typename WeightFn, typename Visit>
void ForEachWeightedProfile(const std::vector<int>& counts, int player,
                            WeightFn weight_of, Visit visit) {
  const int n = static_cast<int>(counts.size());
  std::vector<int> actions(n, 0);
  std::int64_t flat = 0;
  while (true) {
    T weight(1);
    bool zero = false;
    for (int q = 0; q < n && !zero; ++q) {
      if (q == player) continue;
      const auto& w = weight_of(q, actions[q]);
      if (w == 0) {
        zero = true;
      } else {
        weight *= w;
      }
    }
    if (!zero) visit(flat, actions[player], weight);
    int q = n - 1;
    while (q >= 0 && ++actions[q] == counts[q]) {
      actions[q] = 0;
      --q;
    }
    if (q < 0) break;
    ++flat;
  }
}

}  // namespace

std::vector<double> NormalFormGame::ActionPayoffs(const MixedProfile& profile,
                                                  int player) const {
  CheckProfile(profile);
  CheckPlayer(*this, player);
  std::vector<double> out(num_actions(player), 0.0);
  const auto& tensor = real_payoffs_[player];
  ForEachWeightedProfile<double>(
      action_counts(), player,
      [&](int q, int a) -> const double& { return profile[q].values()[a]; },
      [&](std::int64_t flat, int own, double w) { out[own] += w * tensor[flat]; });
  return out;
}

std::vector<Rational> NormalFormGame::ExactActionPayoffs(
    const ExactProfile& profile, int player) const {
  CheckProfile(profile);
  CheckPlayer(*this, player);
  std::vector<Rational> out(num_actions(player));
  const auto& tensor = payoffs_[player];
  ForEachWeightedProfile<Rational>(
      action_counts(), player,
      [&](int q, int a) -> const Rational& { return profile[q][a]; },
      [&](std::int64_t flat, int own, const Rational& w) {
        out[own] += w * tensor[flat];
      });
  return out;
}

NormalFormGame ToNormalForm(const PolymatrixGame& game, std::int64_t cap) {
  std::int64_t total = 1;
  for (int c : game.action_counts()) {
    total *= c;
    if (total > cap) {
      throw SizeError("normal form would have more than " +
                      std::to_string(cap) + " pure profiles");
    }
  }
  const int n = game.num_players();
  std::vector<std::vector<Rational>> payoffs(n, std::vector<Rational>(total));
  std::vector<int> actions(n, 0);
  for (std::int64_t flat = 0; flat < total; ++flat) {
    for (const PairwiseTerm& term : game.terms()) {
      const Rational& entry =
          term.matrix(actions[term.row_player], actions[term.col_player]);
      if (entry == 0) continue;
      if (game.shared_payoff()) {
        for (int p = 0; p < n; ++p) payoffs[p][flat] += entry;
      } else {
        payoffs[term.row_player][flat] += entry;
      }
    }
    for (int q = n - 1; q >= 0; --q) {
      if (++actions[q] < game.num_actions(q)) break;
      actions[q] = 0;
    }
  }
  return NormalFormGame(game.action_counts(), game.orientations(),
                        std::move(payoffs), game.team_partition());
}

SymmetricSkewParts DecomposeSymmetricSkew(const RationalMatrix& r) {
  if (!r.square()) throw DimensionError("decomposition needs a square matrix");
  const RationalMatrix rt = r.Transposed();
  const Rational half(1, 2);
  return {half * (r + rt), half * (r - rt)};
}

}  // namespace symgames
