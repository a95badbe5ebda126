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

#include "hintguess/agents/architecture_io.h"

#include "hintguess/errors.h"

namespace hintguess {

using nlohmann::json;

namespace {

std::string ScaleModeName(nn::ScaleMode mode) {
  return mode == nn::ScaleMode::kByKeyDim ? "by_key_dim" : "by_input_count";
}

nn::ScaleMode ParseScaleMode(const std::string& name) {
  if (name == "by_key_dim") return nn::ScaleMode::kByKeyDim;
  if (name == "by_input_count") return nn::ScaleMode::kByInputCount;
  throw ConfigurationError("unknown attention scale mode: " + name);
}

}  // namespace

json ArchitectureToJson(const Architecture& a) {
  json j = {{"kind", KindName(a.kind)}, {"hidden", a.hidden}};
  if (a.attention) {
    j["attention"] = {{"heads", a.attention->heads},
                      {"layers", a.attention->layers},
                      {"model_dim", a.attention->model_dim},
                      {"scale_mode", ScaleModeName(a.attention->scale_mode)}};
  }
  return j;
}

Architecture ArchitectureFromJson(const json& j) {
  try {
    Architecture a = Architecture::Default(ParseKind(j.at("kind").get<std::string>()));
    if (j.contains("hidden")) a.hidden = j.at("hidden").get<std::vector<int>>();
    if (j.contains("attention")) {
      if (!UsesAttention(a.kind)) {
        throw ConfigurationError(KindName(a.kind) + " takes no attention settings");
      }
      const json& at = j.at("attention");
      nn::AttentionSpec spec;
      spec.heads = at.value("heads", spec.heads);
      spec.layers = at.value("layers", spec.layers);
      spec.model_dim = at.value("model_dim", spec.model_dim);
      spec.scale_mode = ParseScaleMode(at.value("scale_mode", std::string("by_key_dim")));
      a.attention = spec;
    }
    a.Validate();
    return a;
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("bad architecture: ") + e.what());
  }
}

}  // namespace hintguess
