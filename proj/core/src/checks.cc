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

#include "symgames/checks.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace symgames {
namespace {

constexpr double kMassSlack = 1e-9;
// Actions closer than this to the best response are treated as optimal.
constexpr double kSuboptimalityFloor = 1e-12;

void RequireSymmetricIdentical(const BimatrixGame& game) {
  if (!game.symmetric() || !game.identical_payoff()) {
    throw InvalidArgument(
        "well-supported report needs a symmetric identical-payoff game");
  }
}

// Oriented shortfall best − payoff of every action of `player`.
std::vector<double> Shortfalls(const Game& game, const MixedProfile& profile,
                               int player) {
  std::vector<double> payoffs = game.ActionPayoffs(profile, player);
  const double sign = Sign(game.orientation(player));
  for (double& v : payoffs) v *= sign;
  const double best = *std::max_element(payoffs.begin(), payoffs.end());
  for (double& v : payoffs) v = best - v;
  return payoffs;
}

}  // namespace

double Certificate::max_regret() const {
  double worst = 0.0;
  for (double r : regrets) worst = std::max(worst, r);
  return worst;
}

Certificate EpsilonNeReport(const Game& game, const MixedProfile& profile,
                            double epsilon, std::string bound_name) {
  if (!(epsilon >= 0.0)) throw InvalidArgument("epsilon must be ≥ 0");
  game.CheckProfile(profile);
  Certificate cert;
  cert.epsilon = epsilon;
  cert.bound_name = std::move(bound_name);
  cert.satisfied = true;
  for (int p = 0; p < game.num_players(); ++p) {
    const Deviation d = BestDeviation(game, profile, p);
    cert.regrets.push_back(d.gain);
    cert.witnesses.push_back({p, d.action, d.gain});
    if (d.gain > epsilon + kCertificateSlack) cert.satisfied = false;
  }
  return cert;
}

double WsneReport(const BimatrixGame& game, const MixedStrategy& x) {
  RequireSymmetricIdentical(game);
  if (x.size() != game.num_actions(0)) {
    throw DimensionError("strategy does not match the game");
  }
  const std::vector<double> shortfall = Shortfalls(game, {x, x}, 0);
  double worst = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] > kSupportThreshold) worst = std::max(worst, shortfall[i]);
  }
  return worst;
}

Rational ExactWsneReport(const BimatrixGame& game, const ExactStrategy& x) {
  RequireSymmetricIdentical(game);
  if (x.size() != game.num_actions(0)) {
    throw DimensionError("strategy does not match the game");
  }
  std::vector<Rational> payoffs = game.ExactActionPayoffs({x, x}, 0);
  if (game.orientation(0) == Orientation::kMinimize) {
    for (auto& v : payoffs) v = -v;
  }
  const Rational best = *std::max_element(payoffs.begin(), payoffs.end());
  Rational worst;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] > 0) worst = std::max(worst, Rational(best - payoffs[i]));
  }
  return worst;
}

double WsneGap(const BimatrixGame& game, const MixedProfile& profile) {
  game.CheckProfile(profile);
  double worst = 0.0;
  for (int p = 0; p < 2; ++p) {
    const std::vector<double> shortfall = Shortfalls(game, profile, p);
    for (int a = 0; a < profile[p].size(); ++a) {
      if (profile[p][a] > kSupportThreshold) {
        worst = std::max(worst, shortfall[a]);
      }
    }
  }
  return worst;
}

MixedProfile NeToWsne(const BimatrixGame& game, const MixedProfile& profile,
                      double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  const Certificate cert = EpsilonNeReport(game, profile, epsilon * epsilon / 8);
  if (!cert.satisfied) {
    throw PreconditionError("profile is not an ε²/8-NE (max regret " +
                            std::to_string(cert.max_regret()) + ")");
  }
  MixedProfile out;
  for (int p = 0; p < 2; ++p) {
    const std::vector<double> shortfall = Shortfalls(game, profile, p);
    std::vector<double> kept(profile[p].values());
    double mass = 0.0;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      if (shortfall[a] > epsilon / 2) kept[a] = 0.0;
      mass += kept[a];
    }
    if (mass <= 0.0) {
      throw LemmaViolation("every played action was removed");
    }
    for (double& v : kept) v /= mass;
    out.emplace_back(std::move(kept));
  }
  const double gap = WsneGap(game, out);
  double drift = 0.0;
  for (int p = 0; p < 2; ++p) {
    drift = std::max(drift, LinfDistance(profile[p].probs(), out[p].probs()));
  }
  if (gap > epsilon + kCertificateSlack ||
      drift > epsilon / 4 + kCertificateSlack) {
    throw LemmaViolation("conversion produced well-supported gap " +
                         std::to_string(gap) + " and drift " +
                         std::to_string(drift) + " for ε = " +
                         std::to_string(epsilon));
  }
  return out;
}

std::vector<MassBoundEntry> MassBoundAudit(const Game& game,
                                           const MixedProfile& profile,
                                           double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  const double eps2 = epsilon * epsilon;
  const Certificate cert = EpsilonNeReport(game, profile, eps2);
  if (!cert.satisfied) {
    throw PreconditionError("profile is not an ε²-NE (max regret " +
                            std::to_string(cert.max_regret()) + ")");
  }
  std::vector<MassBoundEntry> violations;
  for (int p = 0; p < game.num_players(); ++p) {
    const std::vector<double> shortfall = Shortfalls(game, profile, p);
    for (int a = 0; a < profile[p].size(); ++a) {
      const double c = shortfall[a];
      if (c <= kSuboptimalityFloor) continue;
      const double bound = eps2 / c;
      if (profile[p][a] > bound + kMassSlack) {
        violations.push_back({p, a, profile[p][a], c, bound});
      }
    }
  }
  return violations;
}

}  // namespace symgames
