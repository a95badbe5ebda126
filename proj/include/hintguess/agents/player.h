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

#ifndef HINTGUESS_AGENTS_PLAYER_H_
#define HINTGUESS_AGENTS_PLAYER_H_

#include "hintguess/agents/agent.h"
#include "hintguess/game/game.h"
#include "hintguess/random.h"

namespace hintguess {

// Anything that can take a turn in hint-guess.
class Player {
 public:
  virtual ~Player() = default;
  // `state` is the true state; the player is responsible for building its
  // own view of it.
  virtual Card Act(const GameConfig& config, const EpisodeState& state, Role role,
                   Rng& rng) const = 0;
};

// Epsilon-greedy over a Q-network on a freshly permuted observation.
class AgentPlayer : public Player {
 public:
  explicit AgentPlayer(const Agent& agent, double epsilon = 0.0)
      : agent_(agent), epsilon_(epsilon) {}

  Card Act(const GameConfig& config, const EpisodeState& state, Role role,
           Rng& rng) const override;

  const Agent& agent() const { return agent_; }

 private:
  const Agent& agent_;
  double epsilon_;
};

// A player that ignores its observation. kCard picks a uniformly random
// card of its hand, so tuples repeated in the hand are proportionally more
// likely; kTuple is uniform over the distinct legal tuples.
class RandomPlayer : public Player {
 public:
  enum class Mode { kCard, kTuple };
  explicit RandomPlayer(Mode mode = Mode::kCard) : mode_(mode) {}

  Card Act(const GameConfig& config, const EpisodeState& state, Role role,
           Rng& rng) const override;

 private:
  Mode mode_;
};

}  // namespace hintguess

#endif  // HINTGUESS_AGENTS_PLAYER_H_
