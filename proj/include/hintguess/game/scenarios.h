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

#ifndef HINTGUESS_GAME_SCENARIOS_H_
#define HINTGUESS_GAME_SCENARIOS_H_

#include <string>
#include <vector>

#include "hintguess/game/game.h"

namespace hintguess {

// Hand-crafted N=2 probe on the numbers-and-letters grid, with the hint a
// human would give.
struct Scenario {
  std::string name;
  EpisodeState state;
  Card human_hint;
  // True when the hands were constructed from a verbal description rather
  // than copied from a published example.
  bool reconstructed = false;
};

// exact_match, feature_similarity, mutual_exclusivity,
// similarity_exclusivity, in that order.
std::vector<Scenario> ScenarioLibrary();

// Config the scenarios are dealt in (3x3, N=2, one/two-hot).
GameConfig ScenarioConfig();

}  // namespace hintguess

#endif  // HINTGUESS_GAME_SCENARIOS_H_
