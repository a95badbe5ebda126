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

#include "hintguess/training/presets.h"

#include "hintguess/agents/architecture_io.h"
#include "hintguess/errors.h"
#include "hintguess/game/config_io.h"

namespace hintguess {

using nlohmann::json;

std::vector<std::string> PresetNames() {
  return {"full", "sin-full", "n3-desk", "n5-desk", "sin-desk"};
}

RunSpec Preset(const std::string& name, ArchitectureKind kind) {
  RunSpec spec;
  spec.preset = name;
  spec.architecture = Architecture::Default(kind);
  TrainConfig& t = spec.train;
  if (name == "full") {
    spec.game = GameConfig::Standard(5);
    t.curve_interval = 50'000;
  } else if (name == "sin-full") {
    spec.game = GameConfig::OrdinalSinusoidal(3, 0, 19, 200);
    t.episodes = 5'000'000;
    t.replay_capacity = 1'000;
    t.batch = 200;
    t.update_every = 50;
    t.epsilon = {0.05, 0.95, 15'000};
    t.curve_interval = 50'000;
  } else if (name == "n3-desk" || name == "n5-desk") {
    spec.game = GameConfig::Standard(name == "n3-desk" ? 3 : 5);
    t.episodes = 500'000;
    t.lr = 1e-1;
    t.replay_capacity = 20'000;
    t.batch = 200;
    t.update_every = 50;
    t.epsilon = {0.01, 0.95, 50'000};
    t.curve_interval = 10'000;
  } else if (name == "sin-desk") {
    spec.game = GameConfig::OrdinalSinusoidal(3, 0, 19, 32);
    t.episodes = 1'000'000;
    t.lr = 2e-1;
    t.replay_capacity = 20'000;
    t.batch = 200;
    t.update_every = 50;
    t.epsilon = {0.05, 0.95, 15'000};
    t.curve_interval = 10'000;
  } else {
    throw ConfigurationError("unknown preset: " + name);
  }
  return spec;
}

json TrainConfigToJson(const TrainConfig& t) {
  return {{"episodes", t.episodes},
          {"lr", t.lr},
          {"batch", t.batch},
          {"update_every", t.update_every},
          {"replay_capacity", t.replay_capacity},
          {"epsilon", {{"min", t.epsilon.min}, {"start", t.epsilon.start}, {"decay", t.epsilon.decay}}},
          {"seed", t.seed},
          {"variant", VariantName(t.variant)},
          {"obl_level", t.obl_level},
          {"identity_symmetry_only", t.identity_symmetry_only},
          {"curve_interval", t.curve_interval}};
}

TrainConfig TrainConfigFromJson(const json& j, TrainConfig t) {
  try {
    if (!j.is_object()) throw ConfigurationError("train config must be an object");
    t.episodes = j.value("episodes", t.episodes);
    t.lr = j.value("lr", t.lr);
    t.batch = j.value("batch", t.batch);
    t.update_every = j.value("update_every", t.update_every);
    t.replay_capacity = j.value("replay_capacity", t.replay_capacity);
    if (j.contains("epsilon")) {
      const json& e = j.at("epsilon");
      t.epsilon.min = e.value("min", t.epsilon.min);
      t.epsilon.start = e.value("start", t.epsilon.start);
      t.epsilon.decay = e.value("decay", t.epsilon.decay);
    }
    t.seed = j.value("seed", t.seed);
    if (j.contains("variant")) t.variant = ParseVariant(j.at("variant").get<std::string>());
    t.obl_level = j.value("obl_level", t.obl_level);
    t.identity_symmetry_only = j.value("identity_symmetry_only", t.identity_symmetry_only);
    t.curve_interval = j.value("curve_interval", t.curve_interval);
    for (const auto& [key, value] : j.items()) {
      static const char* kKnown[] = {"episodes", "lr", "batch", "update_every", "replay_capacity",
                                     "epsilon", "seed", "variant", "obl_level",
                                     "identity_symmetry_only", "curve_interval"};
      bool known = false;
      for (const char* k : kKnown) known = known || key == k;
      if (!known) throw ConfigurationError("unknown train key: " + key);
    }
    t.Validate();
    return t;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("bad train config: ") + e.what());
  }
}

json RunSpecToJson(const RunSpec& spec) {
  return {{"preset", spec.preset},
          {"game", GameConfigToJson(spec.game)},
          {"architecture", ArchitectureToJson(spec.architecture)},
          {"train", TrainConfigToJson(spec.train)}};
}

RunSpec RunSpecFromJson(const json& j) {
  if (!j.is_object()) throw ConfigurationError("run config must be a JSON object");
  ArchitectureKind kind = ArchitectureKind::kMlp;
  if (j.contains("architecture")) {
    kind = ParseKind(j.at("architecture").value("kind", std::string("mlp")));
  }
  RunSpec spec = Preset(j.value("preset", std::string("full")), kind);
  if (j.contains("architecture")) spec.architecture = ArchitectureFromJson(j.at("architecture"));
  if (j.contains("game")) spec.game = GameConfigFromJson(j.at("game"));
  if (j.contains("train")) spec.train = TrainConfigFromJson(j.at("train"), spec.train);
  for (const auto& [key, value] : j.items()) {
    if (key != "preset" && key != "architecture" && key != "game" && key != "train") {
      throw ConfigurationError("unknown run config key: " + key);
    }
  }
  spec.game.Validate();
  return spec;
}

}  // namespace hintguess
