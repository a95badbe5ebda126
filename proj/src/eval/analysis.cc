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

#include "hintguess/eval/analysis.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hintguess/errors.h"

namespace hintguess {
namespace {

constexpr std::uint64_t kConditionalStream = 0x636f6e64;
constexpr std::uint64_t kProbeStream = 0x70726f62;
constexpr std::uint64_t kOrderStream = 0x6f726472;

// Guesser card matched with `hinter_value` under `matching`, or -1.
int Partner(const ValueMatching& matching, int hinter_value) {
  for (const auto& [h, g] : matching)
    if (h == hinter_value) return g;
  return -1;
}

int HinterFor(const ValueMatching& matching, int guesser_value) {
  for (const auto& [h, g] : matching)
    if (g == guesser_value) return h;
  return -1;
}

std::vector<int> Values(const std::vector<Card>& hand) {
  std::vector<int> out;
  for (const Card& c : hand) out.push_back(c[0]);
  return out;
}

bool Follows(const ValueMatching& m, int target, int hint, int guess) {
  const int expected_hint = HinterFor(m, target);
  return expected_hint == hint && Partner(m, hint) == guess;
}

}  // namespace

std::string ConditionalKindName(ConditionalKind kind) {
  return kind == ConditionalKind::kGuessGivenHint ? "guess_given_hint" : "hint_given_target";
}

ConditionalKind ParseConditionalKind(const std::string& name) {
  if (name == "guess_given_hint") return ConditionalKind::kGuessGivenHint;
  if (name == "hint_given_target") return ConditionalKind::kHintGivenTarget;
  throw ConfigurationError("unknown conditional matrix kind: " + name);
}

ConditionalMatrix BuildConditionalMatrix(const std::vector<PlayerPair>& pairs,
                                         const GameConfig& game, ConditionalKind kind,
                                         std::int64_t games_per_pair, std::uint64_t seed) {
  if (pairs.empty()) throw ConfigurationError("conditional matrix needs at least one pair");
  game.Validate();
  const FeatureSpaces& spaces = game.features;
  const int g = spaces.grid_size();
  ConditionalMatrix m;
  m.kind = kind;
  for (int i = 0; i < g; ++i) m.labels.push_back(spaces.Label(spaces.CardAt(i)));
  m.counts.assign(g, std::vector<std::int64_t>(g, 0));
  m.row_totals.assign(g, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Rng rng = MakeRng(seed + p, kConditionalStream);
    const Player& hinter = *pairs[p].first;
    const Player& guesser = *pairs[p].second;
    for (std::int64_t n = 0; n < games_per_pair; ++n) {
      EpisodeState state = NewGame(game, rng);
      const Card hint = hinter.Act(game, state, Role::kHinter, rng);
      state = Step(spaces, state, hint);
      const Card guess = guesser.Act(game, state, Role::kGuesser, rng);
      const int row = spaces.Index(kind == ConditionalKind::kGuessGivenHint ? hint : state.target());
      const int col = spaces.Index(kind == ConditionalKind::kGuessGivenHint ? guess : hint);
      ++m.counts[row][col];
      ++m.row_totals[row];
    }
  }
  m.probabilities.assign(g, std::vector<double>(g, 0.0));
  for (int r = 0; r < g; ++r) {
    if (m.row_totals[r] == 0) continue;
    for (int c = 0; c < g; ++c)
      m.probabilities[r][c] = static_cast<double>(m.counts[r][c]) / m.row_totals[r];
  }
  return m;
}

const ProbeResult& ProbeReport::at(const std::string& scenario) const {
  for (const ProbeResult& r : results)
    if (r.scenario == scenario) return r;
  throw std::out_of_range("no probe result for " + scenario);
}

ProbeReport ProbeScenarios(const std::vector<PlayerPair>& pairs, int repetitions,
                           std::uint64_t seed, const std::string& mode,
                           const std::vector<Scenario>& scenarios, const GameConfig& game) {
  if (pairs.empty()) throw ConfigurationError("probe needs at least one pair");
  if (repetitions <= 0) throw std::invalid_argument("repetitions must be positive");
  ProbeReport report;
  report.mode = mode;
  const FeatureSpaces& spaces = game.features;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const Scenario& sc = scenarios[s];
    std::int64_t human = 0, wins = 0, total = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Rng rng = MakeRng(seed + 7919 * s + p, kProbeStream);
      for (int r = 0; r < repetitions; ++r) {
        const Card hint = pairs[p].first->Act(game, sc.state, Role::kHinter, rng);
        const EpisodeState hinted = Step(spaces, sc.state, hint);
        const Card guess = pairs[p].second->Act(game, hinted, Role::kGuesser, rng);
        human += hint == sc.human_hint;
        wins += *Step(spaces, hinted, guess).reward;
        ++total;
      }
    }
    ProbeResult result;
    result.scenario = sc.name;
    result.repetitions = static_cast<int>(total);
    result.human_pct = 100.0 * human / total;
    result.win_pct = 100.0 * wins / total;
    report.results.push_back(result);
  }
  return report;
}

ValueMatching SameOrderMatching(std::vector<int> hinter, std::vector<int> guesser) {
  if (hinter.size() != guesser.size()) throw std::invalid_argument("hand sizes differ");
  std::sort(hinter.begin(), hinter.end());
  std::sort(guesser.begin(), guesser.end());
  ValueMatching m;
  for (std::size_t i = 0; i < hinter.size(); ++i) m.emplace_back(hinter[i], guesser[i]);
  return m;
}

ValueMatching ReversedOrderMatching(std::vector<int> hinter, std::vector<int> guesser) {
  if (hinter.size() != guesser.size()) throw std::invalid_argument("hand sizes differ");
  std::sort(hinter.begin(), hinter.end());
  std::sort(guesser.begin(), guesser.end(), std::greater<int>());
  ValueMatching m;
  for (std::size_t i = 0; i < hinter.size(); ++i) m.emplace_back(hinter[i], guesser[i]);
  return m;
}

OrderMatchingResult OrderMatchingRate(const Player& hinter, const Player& guesser,
                                      const GameConfig& game, std::int64_t games,
                                      std::uint64_t seed) {
  game.Validate();
  if (game.features.num_features() != 1 ||
      game.features.domain(0).kind != FeatureDomain::Kind::kOrdinal) {
    throw ConfigurationError("order matching needs a single ordinal feature");
  }
  if (game.hand_size > game.features.grid_size()) {
    throw ConfigurationError("hands cannot be dealt without replacement");
  }
  Rng rng = MakeRng(seed, kOrderStream);
  std::int64_t same = 0, reversed = 0;
  for (std::int64_t n = 0; n < games; ++n) {
    EpisodeState state = NewGame(game, rng, Deal::kWithoutReplacement);
    const Card hint = hinter.Act(game, state, Role::kHinter, rng);
    const EpisodeState hinted = Step(game.features, state, hint);
    const Card guess = guesser.Act(game, hinted, Role::kGuesser, rng);
    const auto h = Values(state.hinter_hand), g = Values(state.guesser_hand);
    const int t = state.target()[0];
    same += Follows(SameOrderMatching(h, g), t, hint[0], guess[0]);
    reversed += Follows(ReversedOrderMatching(h, g), t, hint[0], guess[0]);
  }
  OrderMatchingResult result;
  result.games = games;
  if (games > 0) {
    result.same_order_pct = 100.0 * same / games;
    result.reversed_order_pct = 100.0 * reversed / games;
  }
  return result;
}

}  // namespace hintguess
