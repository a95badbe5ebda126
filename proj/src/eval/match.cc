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

#include "hintguess/eval/match.h"

#include <cmath>

#include "hintguess/errors.h"

namespace hintguess {
namespace {

constexpr std::uint64_t kMatchStream = 0x6d61746368;

double StandardError(double sum, std::int64_t n) {
  if (n < 2) return 0.0;
  // Rewards are 0/1, so the sample variance follows from the mean.
  const double mean = sum / n;
  const double var = mean * (1.0 - mean) * n / (n - 1);
  return std::sqrt(var / n);
}

}  // namespace

MatchResult PlayMatch(const Player& hinter, const Player& guesser, const GameConfig& game,
                      const MatchOptions& options) {
  if (options.games < 0) throw std::invalid_argument("negative game count");
  game.Validate();
  Rng rng = MakeRng(options.seed, kMatchStream);
  MatchResult result;
  result.games = options.games;
  if (options.keep_log) result.log.reserve(options.games);
  double sum = 0.0;
  for (std::int64_t g = 0; g < options.games; ++g) {
    EpisodeState state = NewGame(game, rng, options.deal);
    state = Step(game.features, state, hinter.Act(game, state, Role::kHinter, rng));
    state = Step(game.features, state, guesser.Act(game, state, Role::kGuesser, rng));
    sum += *state.reward;
    if (options.keep_log) result.log.push_back(std::move(state));
  }
  if (options.games > 0) result.mean = sum / options.games;
  result.standard_error = StandardError(sum, options.games);
  return result;
}

void CheckCompatible(const Agent& agent, Role role, const GameConfig& game) {
  if (agent.role() != role) {
    throw ConfigurationError(RoleName(agent.role()) + " agent cannot play " + RoleName(role));
  }
  const GameConfig& own = agent.config();
  if (!(own.features == game.features) || !(own.encoding == game.encoding)) {
    throw ConfigurationError("agent was trained on different features or encoding");
  }
  if (!UsesAttention(agent.kind()) && own.hand_size != game.hand_size) {
    throw ConfigurationError(KindName(agent.kind()) + " agent trained with hand size " +
                             std::to_string(own.hand_size) + " cannot play hand size " +
                             std::to_string(game.hand_size));
  }
}

MatchResult PlayMatch(const Agent& hinter, const Agent& guesser, const GameConfig& game,
                      const MatchOptions& options, double epsilon) {
  CheckCompatible(hinter, Role::kHinter, game);
  CheckCompatible(guesser, Role::kGuesser, game);
  return PlayMatch(AgentPlayer(hinter, epsilon), AgentPlayer(guesser, epsilon), game, options);
}

MatchResult PlayMatch(const Agent& hinter, const Agent& guesser, const MatchOptions& options) {
  return PlayMatch(hinter, guesser, hinter.config(), options);
}

double ChanceBaselineExact(const GameConfig& game, RandomPlayer::Mode mode) {
  game.Validate();
  const int n = game.hand_size;
  const int g = game.features.grid_size();
  if (mode == RandomPlayer::Mode::kCard) {
    // The target itself plus each of the other N-1 iid cards that happens
    // to share its tuple.
    return (1.0 + static_cast<double>(n - 1) / g) / n;
  }
  // P(D = d) = C(g, d) * S(n, d) * d! / g^n, accumulated in log space via
  // the falling factorial g (g-1) ... (g-d+1) = C(g, d) d!.
  std::vector<std::vector<double>> stirling(n + 1, std::vector<double>(n + 1, 0.0));
  stirling[0][0] = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) stirling[i][k] = k * stirling[i - 1][k] + stirling[i - 1][k - 1];
  double score = 0.0;
  for (int d = 1; d <= std::min(n, g); ++d) {
    double falling = 1.0;
    for (int j = 0; j < d; ++j) falling *= static_cast<double>(g - j) / g;
    // falling now holds g^(d) / g^d; multiply the remaining 1/g^(n-d).
    const double p = stirling[n][d] * falling * std::pow(static_cast<double>(g), d - n);
    score += p / d;
  }
  return score;
}

MatchResult ChanceBaseline(const GameConfig& game, std::int64_t games, std::uint64_t seed,
                           RandomPlayer::Mode mode) {
  RandomPlayer random(mode);
  MatchOptions options;
  options.games = games;
  options.seed = seed;
  return PlayMatch(random, random, game, options);
}

}  // namespace hintguess
