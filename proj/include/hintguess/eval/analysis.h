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

#ifndef HINTGUESS_EVAL_ANALYSIS_H_
#define HINTGUESS_EVAL_ANALYSIS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hintguess/agents/player.h"
#include "hintguess/game/game.h"
#include "hintguess/game/scenarios.h"

namespace hintguess {

enum class ConditionalKind { kGuessGivenHint, kHintGivenTarget };
std::string ConditionalKindName(ConditionalKind kind);
ConditionalKind ParseConditionalKind(const std::string& name);

// Row r, column c: Pr(column tuple | row tuple) over the action grid.
struct ConditionalMatrix {
  ConditionalKind kind = ConditionalKind::kGuessGivenHint;
  std::vector<std::string> labels;  // grid order
  std::vector<std::vector<double>> probabilities;
  std::vector<std::vector<std::int64_t>> counts;
  std::vector<std::int64_t> row_totals;
};

using PlayerPair = std::pair<const Player*, const Player*>;  // hinter, guesser

// Tallies tuple co-occurrences over `games_per_pair` random games for each
// pair and row-normalizes. Rows without samples stay zero.
ConditionalMatrix BuildConditionalMatrix(const std::vector<PlayerPair>& pairs,
                                         const GameConfig& game, ConditionalKind kind,
                                         std::int64_t games_per_pair, std::uint64_t seed);

struct ProbeResult {
  std::string scenario;
  double human_pct = 0.0;
  double win_pct = 0.0;
  int repetitions = 0;
};

struct ProbeReport {
  std::string mode;  // "SP" or "XP"
  std::vector<ProbeResult> results;

  // Throws std::out_of_range for an unknown scenario.
  const ProbeResult& at(const std::string& scenario) const;
};

// Plays every scenario `repetitions` times per pair with fresh hand
// permutations. With several pairs the percentages are pooled.
ProbeReport ProbeScenarios(const std::vector<PlayerPair>& pairs, int repetitions,
                           std::uint64_t seed, const std::string& mode = "SP",
                           const std::vector<Scenario>& scenarios = ScenarioLibrary(),
                           const GameConfig& game = ScenarioConfig());

// Matching between hinter and guesser cards by rank. Entry i pairs a hinter
// value with a guesser value.
using ValueMatching = std::vector<std::pair<int, int>>;
// Both hands ascending, matched rank by rank.
ValueMatching SameOrderMatching(std::vector<int> hinter, std::vector<int> guesser);
// Hinter ascending against guesser descending.
ValueMatching ReversedOrderMatching(std::vector<int> hinter, std::vector<int> guesser);

struct OrderMatchingResult {
  double same_order_pct = 0.0;
  double reversed_order_pct = 0.0;
  std::int64_t games = 0;
};

// Needs a single ordinal feature; hands are dealt without replacement. A
// game follows a scheme when the hint is the hinter card matched with the
// target and the guess is the guesser card matched with the hint.
OrderMatchingResult OrderMatchingRate(const Player& hinter, const Player& guesser,
                                      const GameConfig& game, std::int64_t games,
                                      std::uint64_t seed);

}  // namespace hintguess

#endif  // HINTGUESS_EVAL_ANALYSIS_H_
