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

#ifndef HINTGUESS_EVAL_MATCH_H_
#define HINTGUESS_EVAL_MATCH_H_

#include <cstdint>
#include <vector>

#include "hintguess/agents/agent.h"
#include "hintguess/agents/player.h"
#include "hintguess/game/game.h"

namespace hintguess {

struct MatchResult {
  double mean = 0.0;
  double standard_error = 0.0;
  std::int64_t games = 0;
  // Terminal states in play order; filled only when requested.
  std::vector<EpisodeState> log;
};

struct MatchOptions {
  std::int64_t games = 10'000;
  std::uint64_t seed = 0;
  bool keep_log = false;
  Deal deal = Deal::kWithReplacement;
};

MatchResult PlayMatch(const Player& hinter, const Player& guesser, const GameConfig& game,
                      const MatchOptions& options);

// Greedy play unless `epsilon` > 0. Throws ConfigurationError when either
// agent cannot play `game` in its role.
MatchResult PlayMatch(const Agent& hinter, const Agent& guesser, const GameConfig& game,
                      const MatchOptions& options, double epsilon = 0.0);
// Plays the hinter's own game config.
MatchResult PlayMatch(const Agent& hinter, const Agent& guesser, const MatchOptions& options);

// Throws ConfigurationError unless `agent` can act as `role` in `game`.
// Set-based networks accept any hand size; flattened ones need the trained
// one.
void CheckCompatible(const Agent& agent, Role role, const GameConfig& game);

// Expected score of a pair of RandomPlayers, computed exactly. The guesser
// ignores the hint. With kCard the score is 1/N + (N-1)/(N G) for hand size N
// and grid size G; with kTuple it is E[1/D] for D the number of distinct
// tuples in the guesser's hand.
double ChanceBaselineExact(const GameConfig& game,
                           RandomPlayer::Mode mode = RandomPlayer::Mode::kCard);

MatchResult ChanceBaseline(const GameConfig& game, std::int64_t games, std::uint64_t seed,
                           RandomPlayer::Mode mode = RandomPlayer::Mode::kCard);

}  // namespace hintguess

#endif  // HINTGUESS_EVAL_MATCH_H_
