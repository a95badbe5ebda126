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

#ifndef HINTGUESS_SERVICE_CHECKPOINT_H_
#define HINTGUESS_SERVICE_CHECKPOINT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hintguess/agents/agent.h"
#include "hintguess/agents/architecture_io.h"
#include "hintguess/nn/parameters.h"

namespace hintguess {

inline constexpr int kCheckpointVersion = 1;
inline constexpr char kCheckpointFormat[] = "hintguess-checkpoint";

// Lowercase hex SHA-256.
std::string Sha256Hex(const std::string& bytes);

// Little-endian IEEE-754 binary64, base64 encoded.
std::string EncodeDoubles(const std::vector<double>& values);
std::vector<double> DecodeDoubles(const std::string& base64, std::size_t expected_count);

struct ModelCheckpoint {
  int version = kCheckpointVersion;
  Architecture architecture;
  GameConfig game;
  Role role = Role::kHinter;
  std::uint64_t seed = 0;
  nlohmann::json manifest = nlohmann::json::object();
  nn::ParameterSet params;
  std::string digest;  // "sha256:<hex>" of the canonical payload

  static ModelCheckpoint FromAgent(const Agent& agent,
                                   nlohmann::json manifest = nlohmann::json::object());
  Agent ToAgent() const;
};

// Canonical text; fills checkpoint.digest as a side effect of computing it.
std::string SerializeCheckpoint(ModelCheckpoint& checkpoint);
// Throws CorruptionError (unparseable, truncated, digest mismatch, bad blob)
// or UnsupportedFormat (unknown format tag or version).
ModelCheckpoint ParseCheckpoint(const std::string& text);

// Refuses agents holding accumulated gradients (StateError). Writes through
// a temporary file and rename. Returns the digest.
std::string SaveCheckpoint(const Agent& agent, const std::string& path,
                           const nlohmann::json& manifest = nlohmann::json::object());
ModelCheckpoint LoadCheckpoint(const std::string& path);
Agent LoadAgent(const std::string& path);
// Also checks that the agent can play `game` (ConfigurationError).
Agent LoadAgent(const std::string& path, const GameConfig& game);

}  // namespace hintguess

#endif  // HINTGUESS_SERVICE_CHECKPOINT_H_
