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

#include "hintguess/game/scenarios.h"

namespace hintguess {
namespace {

Scenario Make(const FeatureSpaces& f, std::string name, std::vector<std::string> hinter,
              std::vector<std::string> guesser, int target, const std::string& hint,
              bool reconstructed) {
  std::vector<Card> h, g;
  for (const auto& l : hinter) h.push_back(f.Parse(l));
  for (const auto& l : guesser) g.push_back(f.Parse(l));
  return Scenario{std::move(name), MakeState(f, std::move(h), std::move(g), target),
                  f.Parse(hint), reconstructed};
}

}  // namespace

GameConfig ScenarioConfig() { return GameConfig::Standard(2); }

std::vector<Scenario> ScenarioLibrary() {
  const FeatureSpaces f = FeatureSpaces::NumbersAndLetters();
  std::vector<Scenario> out;
  // The hinter holds a copy of the target.
  out.push_back(Make(f, "exact_match", {"2B", "3C"}, {"2B", "1A"}, 0, "2B", true));
  // No copies anywhere; each hinter card shares one feature with a
  // different guesser card (1A~1C, 2B~3B). Target 3B -> hint 2B.
  out.push_back(Make(f, "feature_similarity", {"1A", "2B"}, {"1C", "3B"}, 1, "2B", true));
  // 1B is spoken for, so 3C must point at 2A despite sharing nothing.
  out.push_back(Make(f, "mutual_exclusivity", {"1B", "3C"}, {"1B", "2A"}, 1, "3C", false));
  // Both hinter cards share one feature with the target 1A, but 2A is the
  // only card sharing anything with 2B, so 1C is left for 1A.
  out.push_back(Make(f, "similarity_exclusivity", {"1C", "2A"}, {"1A", "2B"}, 0, "1C", true));
  return out;
}

}  // namespace hintguess
