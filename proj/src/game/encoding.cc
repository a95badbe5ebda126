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

#include "hintguess/game/encoding.h"

#include <algorithm>
#include <cmath>

#include "hintguess/errors.h"

namespace hintguess {

std::vector<double> SinusoidalEncode(int n, int dim) {
  if (dim <= 0 || dim % 2 != 0) throw ConfigurationError("sinusoidal dim must be even");
  std::vector<double> out(dim);
  for (int i = 0; i < dim / 2; ++i) {
    const double angle = n / std::pow(10000.0, 2.0 * i / dim);
    out[2 * i] = std::sin(angle);
    out[2 * i + 1] = std::cos(angle);
  }
  return out;
}

CardEncoder::CardEncoder(const GameConfig& config)
    : spaces_(config.features), encoding_(config.encoding) {
  config.Validate();
  if (encoding_.kind == EncodingKind::kOneHot) {
    int offset = 0;
    for (const auto& d : spaces_.domains()) {
      offsets_.push_back(offset);
      offset += d.size();
    }
    width_ = offset + 2;
  } else {
    const auto& d = spaces_.domain(0);
    for (int i = 0; i < d.size(); ++i) {
      sinusoid_table_.push_back(SinusoidalEncode(d.NumericValue(i), encoding_.dim));
    }
    width_ = encoding_.dim + 2;
  }
}

void CardEncoder::Encode(const Card& card, bool guesser_owned, bool query,
                         std::span<double> out) const {
  if (static_cast<int>(out.size()) != width_) throw ConfigurationError("encode buffer width");
  std::fill(out.begin(), out.end(), 0.0);
  if (encoding_.kind == EncodingKind::kOneHot) {
    for (int k = 0; k < spaces_.num_features(); ++k) out[offsets_[k] + card[k]] = 1.0;
  } else {
    const auto& row = sinusoid_table_.at(card[0]);
    std::copy(row.begin(), row.end(), out.begin());
  }
  out[width_ - 2] = guesser_owned ? 1.0 : 0.0;
  out[width_ - 1] = query ? 1.0 : 0.0;
}

std::vector<double> CardEncoder::Encode(const Card& card, bool guesser_owned, bool query) const {
  std::vector<double> out(width_);
  Encode(card, guesser_owned, query, out);
  return out;
}

Observation Observe(const GameConfig& config, const EpisodeState& state, Role role, Rng& rng) {
  Observation obs;
  obs.actor = role;
  obs.legal = LegalActions(config.features, state, role);
  std::vector<Card> hinter = state.hinter_hand;
  std::vector<Card> guesser = state.guesser_hand;
  std::shuffle(hinter.begin(), hinter.end(), rng);
  std::shuffle(guesser.begin(), guesser.end(), rng);
  obs.cards.reserve(hinter.size() + guesser.size() + 1);
  for (const Card& c : hinter) {
    obs.cards.push_back(c);
    obs.roles.push_back(ElementRole::kHinterCard);
  }
  for (const Card& c : guesser) {
    obs.cards.push_back(c);
    obs.roles.push_back(ElementRole::kGuesserCard);
  }
  obs.cards.push_back(role == Role::kHinter ? state.target() : *state.hinted_card);
  obs.roles.push_back(ElementRole::kQueryCard);
  return obs;
}

bool GuesserOwned(ElementRole element, Role actor) {
  switch (element) {
    case ElementRole::kHinterCard:
      return false;
    case ElementRole::kGuesserCard:
      return true;
    case ElementRole::kQueryCard:
      return actor == Role::kHinter;
  }
  return false;
}

FeatureSequence Encode(const Observation& observation, const CardEncoder& encoder) {
  FeatureSequence seq;
  seq.actor = observation.actor;
  seq.roles = observation.roles;
  seq.legal = observation.legal;
  seq.elements = nn::Matrix(static_cast<int>(observation.cards.size()), encoder.width());
  for (int i = 0; i < seq.elements.rows(); ++i) {
    const ElementRole r = observation.roles[i];
    encoder.Encode(observation.cards[i], GuesserOwned(r, observation.actor),
                   r == ElementRole::kQueryCard, seq.elements.row(i));
  }
  return seq;
}

FeatureSequence EncodeObservation(const GameConfig& config, const EpisodeState& state,
                                  Role role, Rng& rng) {
  return Encode(Observe(config, state, role, rng), CardEncoder(config));
}

std::vector<double> EncodeAction(const CardEncoder& encoder, const Card& action, Role actor) {
  return encoder.Encode(action, actor == Role::kGuesser, false);
}

}  // namespace hintguess
