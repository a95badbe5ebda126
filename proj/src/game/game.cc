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

#include "hintguess/game/game.h"

#include <algorithm>
#include <numeric>

#include "hintguess/errors.h"

namespace hintguess {

std::string RoleName(Role role) { return role == Role::kHinter ? "hinter" : "guesser"; }

Role ParseRole(const std::string& name) {
  if (name == "hinter") return Role::kHinter;
  if (name == "guesser") return Role::kGuesser;
  throw ConfigurationError("unknown role: " + name);
}

void GameConfig::Validate() const {
  if (hand_size < 1) throw ConfigurationError("hand_size must be >= 1");
  if (features.num_features() < 1) throw ConfigurationError("no feature spaces");
  if (encoding.kind == EncodingKind::kSinusoidal) {
    if (features.num_features() != 1 ||
        features.domain(0).kind != FeatureDomain::Kind::kOrdinal) {
      throw ConfigurationError("sinusoidal encoding needs a single ordinal feature space");
    }
    if (encoding.dim <= 0 || encoding.dim % 2 != 0) {
      throw ConfigurationError("sinusoidal dim must be even and positive");
    }
  }
  if (same_hand && hand_size < 1) throw ConfigurationError("same_hand needs a hand");
}

GameConfig GameConfig::Standard(int hand_size, bool same_hand) {
  GameConfig c;
  c.hand_size = hand_size;
  c.same_hand = same_hand;
  c.Validate();
  return c;
}

GameConfig GameConfig::OrdinalSinusoidal(int hand_size, int lo, int hi, int dim) {
  GameConfig c;
  c.hand_size = hand_size;
  c.features = FeatureSpaces::SingleOrdinal(lo, hi);
  c.encoding = Encoding{EncodingKind::kSinusoidal, dim};
  c.Validate();
  return c;
}

namespace {

std::vector<Card> DealHand(const GameConfig& config, Rng& rng, Deal deal) {
  const int grid = config.features.grid_size();
  std::vector<Card> hand;
  hand.reserve(config.hand_size);
  if (deal == Deal::kWithReplacement) {
    for (int i = 0; i < config.hand_size; ++i) {
      hand.push_back(config.features.CardAt(UniformInt(rng, grid)));
    }
    return hand;
  }
  if (config.hand_size > grid) {
    throw ConfigurationError("hand larger than the grid cannot be dealt without replacement");
  }
  // Partial Fisher-Yates over the grid.
  std::vector<int> pool(grid);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < config.hand_size; ++i) {
    const int j = i + UniformInt(rng, grid - i);
    std::swap(pool[i], pool[j]);
    hand.push_back(config.features.CardAt(pool[i]));
  }
  return hand;
}

}  // namespace

EpisodeState NewGame(const GameConfig& config, Rng& rng, Deal deal) {
  EpisodeState s;
  s.hinter_hand = DealHand(config, rng, deal);
  s.guesser_hand = config.same_hand ? s.hinter_hand : DealHand(config, rng, deal);
  s.target_index = UniformInt(rng, config.hand_size);
  return s;
}

EpisodeState MakeState(const FeatureSpaces& spaces, std::vector<Card> hinter_hand,
                       std::vector<Card> guesser_hand, int target_index) {
  if (hinter_hand.empty() || hinter_hand.size() != guesser_hand.size()) {
    throw ConfigurationError("hands must be non-empty and of equal size");
  }
  for (const auto* hand : {&hinter_hand, &guesser_hand})
    for (const Card& c : *hand)
      if (!spaces.Contains(c)) throw ConfigurationError("card outside feature spaces");
  if (target_index < 0 || target_index >= static_cast<int>(guesser_hand.size())) {
    throw ConfigurationError("target index out of range");
  }
  EpisodeState s;
  s.hinter_hand = std::move(hinter_hand);
  s.guesser_hand = std::move(guesser_hand);
  s.target_index = target_index;
  return s;
}

ActionSet HandActions(const FeatureSpaces& spaces, const std::vector<Card>& hand) {
  ActionSet set;
  set.mask.assign(spaces.grid_size(), false);
  for (const Card& c : hand) set.mask[spaces.Index(c)] = true;
  for (int i = 0; i < spaces.grid_size(); ++i) {
    if (!set.mask[i]) continue;
    set.indices.push_back(i);
    set.actions.push_back(spaces.CardAt(i));
  }
  return set;
}

std::optional<Role> ActingRole(const EpisodeState& state) {
  switch (state.phase) {
    case Phase::kAwaitHint:
      return Role::kHinter;
    case Phase::kAwaitGuess:
      return Role::kGuesser;
    case Phase::kTerminal:
      return std::nullopt;
  }
  return std::nullopt;
}

ActionSet LegalActions(const FeatureSpaces& spaces, const EpisodeState& state, Role role) {
  const auto acting = ActingRole(state);
  if (!acting || *acting != role) {
    throw ProtocolError(RoleName(role) + " cannot act in the current phase");
  }
  return HandActions(spaces, state.hand(role));
}

EpisodeState Step(const FeatureSpaces& spaces, const EpisodeState& state, const Card& action) {
  const auto acting = ActingRole(state);
  if (!acting) throw ProtocolError("game is already over");
  const auto& hand = state.hand(*acting);
  if (std::find(hand.begin(), hand.end(), action) == hand.end()) {
    const std::string label = spaces.Contains(action) ? spaces.Label(action) : "<invalid>";
    throw ProtocolError("illegal action " + label + " for " + RoleName(*acting));
  }
  EpisodeState next = state;
  if (*acting == Role::kHinter) {
    next.hinted_card = action;
    next.phase = Phase::kAwaitGuess;
  } else {
    next.reward = action == state.target() ? 1 : 0;
    next.phase = Phase::kTerminal;
  }
  return next;
}

}  // namespace hintguess
