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

#ifndef HINTGUESS_AGENTS_ARCHITECTURE_IO_H_
#define HINTGUESS_AGENTS_ARCHITECTURE_IO_H_

#include "json.hpp"

#include "hintguess/agents/agent.h"

namespace hintguess {

// {"kind": "sa2i", "hidden": [128, 128, 128],
//  "attention": {"heads": 1, "layers": 1, "model_dim": 0,
//                "scale_mode": "by_key_dim" | "by_input_count"}}
// Missing keys take the kind's defaults.
nlohmann::json ArchitectureToJson(const Architecture& architecture);
Architecture ArchitectureFromJson(const nlohmann::json& j);

}  // namespace hintguess

#endif  // HINTGUESS_AGENTS_ARCHITECTURE_IO_H_
