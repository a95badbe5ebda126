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

#ifndef HINTGUESS_GAME_CONFIG_IO_H_
#define HINTGUESS_GAME_CONFIG_IO_H_

#include <string>

#include "hintguess/game/game.h"
#include "json.hpp"

namespace hintguess {

// Schema (see docs/config.md):
//   {"hand_size": 5, "same_hand": false,
//    "features": [{"name": "number", "type": "categorical", "labels": ["1","2","3"]},
//                 {"name": "n", "type": "ordinal", "min": 0, "max": 19}],
//    "encoding": {"type": "one_hot"} | {"type": "sinusoidal", "dim": 200}}
nlohmann::json GameConfigToJson(const GameConfig& config);
GameConfig GameConfigFromJson(const nlohmann::json& j);

GameConfig LoadGameConfig(const std::string& path);
void SaveGameConfig(const GameConfig& config, const std::string& path);

}  // namespace hintguess

#endif  // HINTGUESS_GAME_CONFIG_IO_H_
