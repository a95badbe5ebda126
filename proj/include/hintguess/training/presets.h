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

#ifndef HINTGUESS_TRAINING_PRESETS_H_
#define HINTGUESS_TRAINING_PRESETS_H_

#include <string>
#include <vector>

#include "json.hpp"

#include "hintguess/agents/agent.h"
#include "hintguess/game/game.h"
#include "hintguess/training/trainer.h"

namespace hintguess {

// Everything needed to reproduce one training run.
struct RunSpec {
  std::string preset;
  GameConfig game;
  Architecture architecture;
  TrainConfig train;
};

// full          3x3, N=5, 4M episodes, replay 300K, batch 500, update/500
// sin-full      {0..19}, N=3, sinusoidal 200, replay 1K, batch 200,
//               update/50, eps min 0.05, K 15000, 5M episodes
// n3-desk       3x3, N=3, reduced budget
// n5-desk       3x3, N=5, reduced budget
// sin-desk      {0..19}, N=3, sinusoidal, reduced budget
std::vector<std::string> PresetNames();

// Throws ConfigurationError for an unknown name.
RunSpec Preset(const std::string& name, ArchitectureKind kind = ArchitectureKind::kMlp);

nlohmann::json TrainConfigToJson(const TrainConfig& config);
// Keys absent from `j` keep their value in `base`.
TrainConfig TrainConfigFromJson(const nlohmann::json& j, TrainConfig base = {});

nlohmann::json RunSpecToJson(const RunSpec& spec);
// {"preset": name, "architecture": {...}, "game": {...}, "train": {...}}.
// Starts from the preset (default "full") and overlays the other keys.
RunSpec RunSpecFromJson(const nlohmann::json& j);

}  // namespace hintguess

#endif  // HINTGUESS_TRAINING_PRESETS_H_
