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

#ifndef HINTGUESS_GAME_ENCODING_H_
#define HINTGUESS_GAME_ENCODING_H_

#include <span>
#include <vector>

#include "hintguess/game/game.h"
#include "hintguess/nn/matrix.h"
#include "hintguess/random.h"

namespace hintguess {

// Component 2i = sin(n / 10000^(2i/dim)), 2i+1 = cos(same). dim must be even.
std::vector<double> SinusoidalEncode(int n, int dim);

enum class ElementRole { kHinterCard, kGuesserCard, kQueryCard };

// Per-card feature vector: the feature encoding followed by an owner bit
// (0 hinter, 1 guesser) and a query bit.
class CardEncoder {
 public:
  explicit CardEncoder(const GameConfig& config);

  int width() const { return width_; }
  int feature_width() const { return width_ - 2; }

  void Encode(const Card& card, bool guesser_owned, bool query, std::span<double> out) const;
  std::vector<double> Encode(const Card& card, bool guesser_owned, bool query) const;

 private:
  FeatureSpaces spaces_;
  Encoding encoding_;
  int width_ = 0;
  std::vector<int> offsets_;            // one-hot block offsets
  std::vector<std::vector<double>> sinusoid_table_;  // by value index
};

// Compact observation: ordered cards with tags, before featurization. The
// order is permuted hinter hand, permuted guesser hand, then the query card
// (the target for the hinter, the hint for the guesser).
struct Observation {
  Role actor = Role::kHinter;
  std::vector<Card> cards;
  std::vector<ElementRole> roles;
  ActionSet legal;
};

// The encoded observation: one row per element.
struct FeatureSequence {
  nn::Matrix elements;
  std::vector<ElementRole> roles;
  Role actor = Role::kHinter;
  ActionSet legal;

  int length() const { return elements.rows(); }
  int width() const { return elements.cols(); }
};

// Observation of `role` with both hands freshly permuted.
Observation Observe(const GameConfig& config, const EpisodeState& state, Role role, Rng& rng);

// Owner bit of an element as seen by `actor`. The query element carries its
// true owner: the target belongs to the guesser, the hint to the hinter.
bool GuesserOwned(ElementRole element, Role actor);

FeatureSequence Encode(const Observation& observation, const CardEncoder& encoder);

FeatureSequence EncodeObservation(const GameConfig& config, const EpisodeState& state,
                                  Role role, Rng& rng);

// Feature vector of an action played by `actor`: owner bit of the actor,
// query bit clear.
std::vector<double> EncodeAction(const CardEncoder& encoder, const Card& action, Role actor);

}  // namespace hintguess

#endif  // HINTGUESS_GAME_ENCODING_H_
