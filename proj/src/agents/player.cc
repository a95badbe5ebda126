// Copyright 2026 The HintGuess Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hintguess/agents/player.h"

#include "hintguess/errors.h"
#include "hintguess/game/encoding.h"

namespace hintguess {

Card AgentPlayer::Act(const GameConfig& config, const EpisodeState& state, Role role,
                      Rng& rng) const {
  if (role != agent_.role()) {
    throw ConfigurationError(RoleName(agent_.role()) + " agent asked to act as " +
                             RoleName(role));
  }
  const Observation obs = Observe(config, state, role, rng);
  const QVector q = agent_.QValues(obs);
  return config.features.CardAt(SelectAction(q, epsilon_, rng));
}

Card RandomPlayer::Act(const GameConfig& config, const EpisodeState& state, Role role,
                       Rng& rng) const {
  const ActionSet legal = LegalActions(config.features, state, role);
  if (mode_ == Mode::kCard) {
    const std::vector<Card>& hand = state.hand(role);
    return hand[UniformInt(rng, static_cast<int>(hand.size()))];
  }
  return legal.actions[UniformInt(rng, legal.size())];
}

}  // namespace hintguess
