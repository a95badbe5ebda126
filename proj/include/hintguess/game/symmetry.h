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

#ifndef HINTGUESS_GAME_SYMMETRY_H_
#define HINTGUESS_GAME_SYMMETRY_H_

#include <vector>

#include "hintguess/game/game.h"
#include "hintguess/random.h"

namespace hintguess {

// Relabeling of feature values: permutations[k][v] is the new value index
// of value v in feature space k.
struct Symmetry {
  std::vector<std::vector<int>> permutations;

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

Symmetry IdentitySymmetry(const FeatureSpaces& spaces);
// Throws std::invalid_argument unless each permutation is a bijection on
// its domain.
void ValidateSymmetry(const FeatureSpaces& spaces, const Symmetry& symmetry);
Symmetry Inverse(const Symmetry& symmetry);

Card ApplySymmetry(const Symmetry& symmetry, const Card& card);
// Relabels both hands and the hint; target index and phase are unchanged.
EpisodeState ApplySymmetry(const FeatureSpaces& spaces, const EpisodeState& state,
                           const Symmetry& symmetry);

// Uniform sampler over within-space permutations (or the identity only).
class SymmetryGroup {
 public:
  static SymmetryGroup AllValuePermutations(const FeatureSpaces& spaces);
  static SymmetryGroup IdentityOnly(const FeatureSpaces& spaces);

  Symmetry Sample(Rng& rng) const;
  long long order() const;
  // Dense id in [0, order()) used for frequency audits.
  long long Id(const Symmetry& symmetry) const;

 private:
  std::vector<int> sizes_;
  bool identity_only_ = false;
};

}  // namespace hintguess

#endif  // HINTGUESS_GAME_SYMMETRY_H_
