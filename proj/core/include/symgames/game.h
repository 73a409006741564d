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

#ifndef SYMGAMES_GAME_H_
#define SYMGAMES_GAME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "symgames/rational.h"

namespace symgames {

inline constexpr double kClampTolerance = 1e-12;
inline constexpr double kSumTolerance = 1e-9;
// Probabilities above this count as "played" in well-supported checks.
inline constexpr double kSupportThreshold = 1e-12;

enum class Orientation { kMaximize, kMinimize };

std::string_view OrientationName(Orientation orientation);
Orientation ParseOrientation(std::string_view name);
inline double Sign(Orientation o) {
  return o == Orientation::kMaximize ? 1.0 : -1.0;
}

// A point of the probability simplex. Entries down to -1e-12 are clamped to
// zero and the vector is renormalized; anything worse is rejected.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> weights);

  static MixedStrategy Pure(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  const std::vector<double>& values() const { return probs_; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<double> probs_;
};

// A point of the simplex with exact rational coordinates summing to one.
class ExactStrategy {
 public:
  explicit ExactStrategy(std::vector<Rational> probs);

  static ExactStrategy Pure(int num_actions, int action);
  static ExactStrategy Uniform(int num_actions);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int i) const { return probs_[i]; }
  std::span<const Rational> probs() const { return probs_; }
  MixedStrategy ToMixed() const;

  friend bool operator==(const ExactStrategy&, const ExactStrategy&) = default;

 private:
  std::vector<Rational> probs_;
};

using MixedProfile = std::vector<MixedStrategy>;
using ExactProfile = std::vector<ExactStrategy>;

MixedProfile ToMixed(const ExactProfile& profile);

double LinfDistance(std::span<const double> a, std::span<const double> b);
double L2Distance(std::span<const double> a, std::span<const double> b);

// Two disjoint teams covering every player. Members of a team share one
// orientation and the two teams have opposite orientations.
struct TeamPartition {
  std::vector<int> first;
  std::vector<int> second;
  friend bool operator==(const TeamPartition&, const TeamPartition&) = default;
};

class Game {
 public:
  virtual ~Game() = default;

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(int player) const { return action_counts_.at(player); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  Orientation orientation(int player) const {
    return orientations_.at(player);
  }
  const std::vector<Orientation>& orientations() const { return orientations_; }
  const std::optional<TeamPartition>& team_partition() const { return teams_; }

  // Expected payoff of every pure action of `player` when the other players
  // follow `profile`. The player's own entry of the profile is ignored.
  virtual std::vector<double> ActionPayoffs(const MixedProfile& profile,
                                            int player) const = 0;
  virtual std::vector<Rational> ExactActionPayoffs(const ExactProfile& profile,
                                                   int player) const = 0;

  // Throws DimensionError unless the profile matches the action counts.
  void CheckProfile(const MixedProfile& profile) const;
  void CheckProfile(const ExactProfile& profile) const;

 protected:
  Game(std::vector<int> action_counts, std::vector<Orientation> orientations,
       std::optional<TeamPartition> teams);

 private:
  std::vector<int> action_counts_;
  std::vector<Orientation> orientations_;
  std::optional<TeamPartition> teams_;
};

// Raw (unoriented) expected payoff of `player`.
double EvaluateUtility(const Game& game, const MixedProfile& profile,
                       int player);
Rational ExactUtility(const Game& game, const ExactProfile& profile,
                      int player);

struct Deviation {
  int action = 0;
  double gain = 0.0;
};

// Best pure deviation of `player`, with the gain measured in the player's
// own orientation.
Deviation BestDeviation(const Game& game, const MixedProfile& profile,
                        int player);

double Regret(const Game& game, const MixedProfile& profile, int player);
Rational ExactRegret(const Game& game, const ExactProfile& profile,
                     int player);
double MaxRegret(const Game& game, const MixedProfile& profile);
Rational ExactMaxRegret(const Game& game, const ExactProfile& profile);

// Two-player game with row payoffs R and column payoffs C, both indexed
// [row action][column action].
class BimatrixGame : public Game {
 public:
  BimatrixGame(RationalMatrix row_payoffs, RationalMatrix col_payoffs,
               std::vector<Orientation> orientations = {
                   Orientation::kMaximize, Orientation::kMaximize});

  // Symmetric identical-payoff game (A, A) where A = Aᵀ.
  static BimatrixGame SymmetricIdentical(
      const RationalMatrix& a, Orientation orientation = Orientation::kMaximize);
  // Symmetric game (R, Rᵀ).
  static BimatrixGame Symmetric(const RationalMatrix& r,
                                Orientation orientation = Orientation::kMaximize);

  const RationalMatrix& row_payoffs() const { return row_; }
  const RationalMatrix& col_payoffs() const { return col_; }
  const RealMatrix& row_payoffs_real() const { return row_real_; }
  const RealMatrix& col_payoffs_real() const { return col_real_; }

  bool symmetric() const;
  bool identical_payoff() const;

  std::vector<double> ActionPayoffs(const MixedProfile& profile,
                                    int player) const override;
  std::vector<Rational> ExactActionPayoffs(const ExactProfile& profile,
                                           int player) const override;

 private:
  RationalMatrix row_;
  RationalMatrix col_;
  RealMatrix row_real_;
  RealMatrix col_real_;
};

// x_iᵀ M x_j with M of shape actions(i) × actions(j).
struct PairwiseTerm {
  int row_player = 0;
  int col_player = 0;
  RationalMatrix matrix;
};

// Without a team partition a term (i, j, M) is paid to player i only. With a
// team partition the terms together define one function U and every player
// receives U; orientations then make the teams opponents.
class PolymatrixGame : public Game {
 public:
  PolymatrixGame(std::vector<int> action_counts,
                 std::vector<Orientation> orientations,
                 std::vector<PairwiseTerm> terms,
                 std::optional<TeamPartition> teams = std::nullopt);

  // Terms after merging duplicates, ordered by (row_player, col_player).
  const std::vector<PairwiseTerm>& terms() const { return terms_; }
  bool shared_payoff() const { return team_partition().has_value(); }

  std::vector<double> ActionPayoffs(const MixedProfile& profile,
                                    int player) const override;
  std::vector<Rational> ExactActionPayoffs(const ExactProfile& profile,
                                           int player) const override;

 private:
  bool Contributes(const PairwiseTerm& term, int player) const;

  std::vector<PairwiseTerm> terms_;
  std::vector<RealMatrix> real_terms_;
};

// Dense per-player payoff tensors, flattened row-major with player 0 as the
// slowest index.
class NormalFormGame : public Game {
 public:
  NormalFormGame(std::vector<int> action_counts,
                 std::vector<Orientation> orientations,
                 std::vector<std::vector<Rational>> payoffs,
                 std::optional<TeamPartition> teams = std::nullopt);

  std::int64_t num_pure_profiles() const { return num_profiles_; }
  const std::vector<Rational>& payoffs(int player) const {
    return payoffs_.at(player);
  }
  std::int64_t FlatIndex(std::span<const int> actions) const;
  const Rational& Payoff(std::span<const int> actions, int player) const;

  std::vector<double> ActionPayoffs(const MixedProfile& profile,
                                    int player) const override;
  std::vector<Rational> ExactActionPayoffs(const ExactProfile& profile,
                                           int player) const override;

 private:
  std::int64_t num_profiles_ = 1;
  std::vector<std::vector<Rational>> payoffs_;
  std::vector<std::vector<double>> real_payoffs_;
};

inline constexpr std::int64_t kDefaultNormalFormCap = 10'000'000;

NormalFormGame ToNormalForm(const PolymatrixGame& game,
                            std::int64_t cap = kDefaultNormalFormCap);

struct SymmetricSkewParts {
  RationalMatrix symmetric;  // (R + Rᵀ)/2
  RationalMatrix skew;       // (R − Rᵀ)/2
};

SymmetricSkewParts DecomposeSymmetricSkew(const RationalMatrix& r);

}  // namespace symgames

#endif  // SYMGAMES_GAME_H_
