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

#ifndef HINTGUESS_GAME_GAME_H_
#define HINTGUESS_GAME_GAME_H_

#include <optional>
#include <string>
#include <vector>

#include "hintguess/game/features.h"
#include "hintguess/random.h"

namespace hintguess {

enum class Role { kHinter = 0, kGuesser = 1 };
std::string RoleName(Role role);
Role ParseRole(const std::string& name);

enum class EncodingKind { kOneHot, kSinusoidal };

struct Encoding {
  EncodingKind kind = EncodingKind::kOneHot;
  int dim = 0;  // sinusoidal only

  friend bool operator==(const Encoding&, const Encoding&) = default;
};

struct GameConfig {
  int hand_size = 5;
  FeatureSpaces features = FeatureSpaces::NumbersAndLetters();
  bool same_hand = false;
  Encoding encoding;

  // Throws ConfigurationError on an invalid combination.
  void Validate() const;

  // 3x3 numbers-and-letters with one/two-hot encoding.
  static GameConfig Standard(int hand_size, bool same_hand = false);
  // Single ordinal feature {lo..hi} with sinusoidal encoding of `dim`.
  static GameConfig OrdinalSinusoidal(int hand_size, int lo, int hi, int dim);

  friend bool operator==(const GameConfig& a, const GameConfig& b) {
    return a.hand_size == b.hand_size && a.features == b.features &&
           a.same_hand == b.same_hand && a.encoding == b.encoding;
  }
};

enum class Phase { kAwaitHint, kAwaitGuess, kTerminal };

struct EpisodeState {
  std::vector<Card> hinter_hand;
  std::vector<Card> guesser_hand;
  int target_index = 0;
  std::optional<Card> hinted_card;
  Phase phase = Phase::kAwaitHint;
  std::optional<int> reward;

  const Card& target() const { return guesser_hand.at(target_index); }
  const std::vector<Card>& hand(Role role) const {
    return role == Role::kHinter ? hinter_hand : guesser_hand;
  }

  friend bool operator==(const EpisodeState&, const EpisodeState&) = default;
};

enum class Deal {
  kWithReplacement,     // cards iid uniform over the grid
  kWithoutReplacement,  // distinct cards within each hand
};

EpisodeState NewGame(const GameConfig& config, Rng& rng,
                     Deal deal = Deal::kWithReplacement);

// A fresh AwaitHint state from explicit hands; validates sizes and values.
EpisodeState MakeState(const FeatureSpaces& spaces, std::vector<Card> hinter_hand,
                       std::vector<Card> guesser_hand, int target_index);

// Distinct feature tuples of the acting hand, in grid order, plus the mask
// over the full grid.
struct ActionSet {
  std::vector<Card> actions;
  std::vector<int> indices;  // grid index of actions[i]
  std::vector<bool> mask;    // grid_size entries

  bool Contains(int grid_index) const {
    return grid_index >= 0 && grid_index < static_cast<int>(mask.size()) && mask[grid_index];
  }
  int size() const { return static_cast<int>(actions.size()); }
};

ActionSet HandActions(const FeatureSpaces& spaces, const std::vector<Card>& hand);

// Throws ProtocolError when `role` is not the player to act.
ActionSet LegalActions(const FeatureSpaces& spaces, const EpisodeState& state, Role role);

// The role to act, or nullopt when terminal.
std::optional<Role> ActingRole(const EpisodeState& state);

// Applies the acting player's feature tuple. Throws ProtocolError for any
// tuple not present in the acting hand or a terminal state.
EpisodeState Step(const FeatureSpaces& spaces, const EpisodeState& state, const Card& action);

}  // namespace hintguess

#endif  // HINTGUESS_GAME_GAME_H_
