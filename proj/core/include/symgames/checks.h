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

#ifndef SYMGAMES_CHECKS_H_
#define SYMGAMES_CHECKS_H_

#include <string>
#include <vector>

#include "symgames/game.h"

namespace symgames {

// Slack added to every ε comparison in certificates.
inline constexpr double kCertificateSlack = 1e-12;

struct WitnessDeviation {
  int player = 0;
  int action = 0;
  double gain = 0.0;
};

struct Certificate {
  std::vector<double> regrets;
  double epsilon = 0.0;
  bool satisfied = false;
  std::string bound_name;
  // Best pure deviation of every player.
  std::vector<WitnessDeviation> witnesses;

  double max_regret() const;
};

Certificate EpsilonNeReport(const Game& game, const MixedProfile& profile,
                            double epsilon = 0.0,
                            std::string bound_name = "epsilon-ne");

// Smallest ε for which (x, x) is an ε-well-supported NE of a symmetric
// identical-payoff game; actions with x_i ≤ 1e-12 count as unplayed.
double WsneReport(const BimatrixGame& game, const MixedStrategy& x);
// Exact version; every positive coordinate counts as played.
Rational ExactWsneReport(const BimatrixGame& game, const ExactStrategy& x);

// Well-supported gap of an arbitrary bimatrix profile: the largest shortfall
// of a played action against the best response, over both players.
double WsneGap(const BimatrixGame& game, const MixedProfile& profile);

// Turns an (ε²/8)-NE into an ε-well-supported NE by dropping every action
// that is more than ε/2 worse than a best response to the opponent's
// original strategy. The result is verified (ε-WSNE, ℓ∞ drift ≤ ε/4)
// before it is returned; the guarantee needs payoffs spanning at most 1.
MixedProfile NeToWsne(const BimatrixGame& game, const MixedProfile& profile,
                      double epsilon);

struct MassBoundEntry {
  int player = 0;
  int action = 0;
  double mass = 0.0;
  double gap = 0.0;    // c: shortfall against the best response
  double bound = 0.0;  // ε²/c
};

// For an ε²-NE, every action that is c-suboptimal carries mass ≤ ε²/c.
// Returns the entries that break the bound (beyond 1e-9).
std::vector<MassBoundEntry> MassBoundAudit(const Game& game,
                                           const MixedProfile& profile,
                                           double epsilon);

}  // namespace symgames

#endif  // SYMGAMES_CHECKS_H_
