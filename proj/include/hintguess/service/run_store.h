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

#ifndef HINTGUESS_SERVICE_RUN_STORE_H_
#define HINTGUESS_SERVICE_RUN_STORE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hintguess/eval/crossplay.h"
#include "hintguess/training/presets.h"
#include "hintguess/training/trainer.h"

namespace hintguess {

inline constexpr char kStoreEnvironmentVariable[] = "HINTGUESS_STORE";

// On-disk layout:
//   <root>/runs/<id>/manifest.json
//   <root>/runs/<id>/checkpoints/{hinter,guesser}.ckpt.json
//   <root>/runs/<id>/curves/train.csv
//   <root>/runs/<id>/reports/
//   <root>/sessions/<id>.jsonl
class RunStore {
 public:
  explicit RunStore(std::filesystem::path root);
  // `root` if given, else $HINTGUESS_STORE, else ./hintguess_store.
  static RunStore Open(const std::optional<std::string>& root = std::nullopt);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path run_dir(const std::string& id) const;
  std::filesystem::path manifest_path(const std::string& id) const;
  std::filesystem::path checkpoint_path(const std::string& id, Role role) const;
  std::filesystem::path curve_path(const std::string& id) const;
  std::filesystem::path reports_dir(const std::string& id) const;
  std::filesystem::path sessions_dir() const;
  std::filesystem::path session_path(const std::string& session_id) const;

  // Throws StateError when the existing manifest is marked complete.
  void WriteManifest(const std::string& id, const nlohmann::json& manifest) const;
  nlohmann::json ReadManifest(const std::string& id) const;
  bool IsComplete(const std::string& id) const;
  std::vector<std::string> ListRuns() const;

  // Empties the run directory unless it holds a completed run (StateError).
  void ResetRun(const std::string& id) const;

 private:
  std::filesystem::path root_;
};

// Throws ConfigurationError for ids with path separators or dots only.
void ValidateId(const std::string& id);

struct StoredRun {
  std::string id;
  nlohmann::json manifest;
  std::string hinter_digest;
  std::string guesser_digest;
  TrainResult result;
};

// Trains `spec`, then writes checkpoints, the curve and a completed
// manifest. An interrupted run still writes valid checkpoints, with
// "complete": false. `lower_hinter` as for RunObl.
StoredRun TrainAndStore(const RunStore& store, const std::string& id, const RunSpec& spec,
                        const Agent* lower_hinter = nullptr, const TrainHooks& hooks = {});

// Loads both checkpoints of a run.
AgentPair LoadRun(const RunStore& store, const std::string& id);

}  // namespace hintguess

#endif  // HINTGUESS_SERVICE_RUN_STORE_H_
