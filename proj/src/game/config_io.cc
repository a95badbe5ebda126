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

#include "hintguess/game/config_io.h"

#include <fstream>

#include "hintguess/errors.h"

namespace hintguess {

using nlohmann::json;

json GameConfigToJson(const GameConfig& config) {
  json features = json::array();
  for (const auto& d : config.features.domains()) {
    if (d.kind == FeatureDomain::Kind::kCategorical) {
      features.push_back({{"name", d.name}, {"type", "categorical"}, {"labels", d.labels}});
    } else {
      features.push_back({{"name", d.name},
                          {"type", "ordinal"},
                          {"min", d.min_value},
                          {"max", d.min_value + d.size() - 1}});
    }
  }
  json encoding = config.encoding.kind == EncodingKind::kOneHot
                      ? json{{"type", "one_hot"}}
                      : json{{"type", "sinusoidal"}, {"dim", config.encoding.dim}};
  return {{"hand_size", config.hand_size},
          {"same_hand", config.same_hand},
          {"features", features},
          {"encoding", encoding}};
}

GameConfig GameConfigFromJson(const json& j) {
  try {
    GameConfig c;
    c.hand_size = j.value("hand_size", 5);
    c.same_hand = j.value("same_hand", false);
    if (j.contains("features")) {
      std::vector<FeatureDomain> domains;
      for (const auto& f : j.at("features")) {
        const std::string type = f.value("type", "categorical");
        const std::string name = f.value("name", "f" + std::to_string(domains.size() + 1));
        if (type == "categorical") {
          domains.push_back(
              FeatureDomain::Categorical(name, f.at("labels").get<std::vector<std::string>>()));
        } else if (type == "ordinal") {
          domains.push_back(
              FeatureDomain::Ordinal(name, f.at("min").get<int>(), f.at("max").get<int>()));
        } else {
          throw ConfigurationError("unknown feature type: " + type);
        }
      }
      c.features = FeatureSpaces(std::move(domains));
    }
    if (j.contains("encoding")) {
      const auto& e = j.at("encoding");
      const std::string type = e.value("type", "one_hot");
      if (type == "one_hot") {
        c.encoding = Encoding{};
      } else if (type == "sinusoidal") {
        c.encoding = Encoding{EncodingKind::kSinusoidal, e.value("dim", 200)};
      } else {
        throw ConfigurationError("unknown encoding: " + type);
      }
    }
    c.Validate();
    return c;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("malformed game config: ") + e.what());
  }
}

GameConfig LoadGameConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open game config: " + path);
  try {
    return GameConfigFromJson(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigurationError("cannot parse " + path + ": " + e.what());
  }
}

void SaveGameConfig(const GameConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot write game config: " + path);
  out << GameConfigToJson(config).dump(2) << "\n";
}

}  // namespace hintguess
