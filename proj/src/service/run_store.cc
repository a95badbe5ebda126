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

#include "hintguess/service/run_store.h"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <algorithm>

#include "hintguess/errors.h"
#include "hintguess/eval/report_io.h"
#include "hintguess/service/checkpoint.h"

namespace hintguess {

namespace fs = std::filesystem;
using nlohmann::json;

void ValidateId(const std::string& id) {
  if (id.empty() || id == "." || id == ".." ||
      id.find_first_of("/\\") != std::string::npos || id.find('\0') != std::string::npos) {
    throw ConfigurationError("invalid id: '" + id + "'");
  }
}

RunStore::RunStore(fs::path root) : root_(std::move(root)) {}

RunStore RunStore::Open(const std::optional<std::string>& root) {
  if (root && !root->empty()) return RunStore(*root);
  if (const char* env = std::getenv(kStoreEnvironmentVariable); env && *env) return RunStore(env);
  return RunStore("hintguess_store");
}

fs::path RunStore::run_dir(const std::string& id) const {
  ValidateId(id);
  return root_ / "runs" / id;
}
fs::path RunStore::manifest_path(const std::string& id) const {
  return run_dir(id) / "manifest.json";
}
fs::path RunStore::checkpoint_path(const std::string& id, Role role) const {
  return run_dir(id) / "checkpoints" / (RoleName(role) + ".ckpt.json");
}
fs::path RunStore::curve_path(const std::string& id) const {
  return run_dir(id) / "curves" / "train.csv";
}
fs::path RunStore::reports_dir(const std::string& id) const { return run_dir(id) / "reports"; }
fs::path RunStore::sessions_dir() const { return root_ / "sessions"; }
fs::path RunStore::session_path(const std::string& session_id) const {
  ValidateId(session_id);
  return sessions_dir() / (session_id + ".jsonl");
}

void RunStore::WriteManifest(const std::string& id, const json& manifest) const {
  if (IsComplete(id)) throw StateError("manifest of completed run " + id + " is immutable");
  WriteTextFile(manifest_path(id).string(), manifest.dump(2) + "\n");
}

json RunStore::ReadManifest(const std::string& id) const {
  try {
    return json::parse(ReadTextFile(manifest_path(id).string()));
  } catch (const json::parse_error& e) {
    throw CorruptionError("unreadable manifest for run " + id + ": " + e.what());
  }
}

bool RunStore::IsComplete(const std::string& id) const {
  if (!fs::exists(manifest_path(id))) return false;
  return ReadManifest(id).value("complete", false);
}

std::vector<std::string> RunStore::ListRuns() const {
  std::vector<std::string> out;
  const fs::path dir = root_ / "runs";
  if (!fs::exists(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_directory()) out.push_back(entry.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

void RunStore::ResetRun(const std::string& id) const {
  if (IsComplete(id)) throw StateError("run " + id + " is complete");
  fs::remove_all(run_dir(id));
}

StoredRun TrainAndStore(const RunStore& store, const std::string& id, const RunSpec& spec,
                        const Agent* lower_hinter, const TrainHooks& hooks) {
  store.ResetRun(id);
  json manifest = RunSpecToJson(spec);
  manifest["id"] = id;
  manifest["complete"] = false;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char started[32];
  std::strftime(started, sizeof(started), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  manifest["started_utc"] = started;
  store.WriteManifest(id, manifest);

  StoredRun run{id, {}, "", "", Train(spec.train, spec.game, spec.architecture, lower_hinter, hooks)};
  // Checkpoints embed only the deterministic part of the manifest so that
  // equal seeds give equal digests.
  const json checkpoint_manifest = {{"run", RunSpecToJson(spec)},
                                    {"episodes_completed", run.result.episodes_completed}};
  run.hinter_digest = SaveCheckpoint(run.result.hinter,
                                     store.checkpoint_path(id, Role::kHinter).string(),
                                     checkpoint_manifest);
  run.guesser_digest = SaveCheckpoint(run.result.guesser,
                                      store.checkpoint_path(id, Role::kGuesser).string(),
                                      checkpoint_manifest);
  WriteTextFile(store.curve_path(id).string(), CurveCsv(run.result.curve));
  manifest["episodes_completed"] = run.result.episodes_completed;
  manifest["wall_clock_seconds"] = run.result.wall_seconds;
  manifest["digests"] = {{"hinter", run.hinter_digest}, {"guesser", run.guesser_digest}};
  manifest["complete"] = !run.result.interrupted;
  store.WriteManifest(id, manifest);
  run.manifest = manifest;
  return run;
}

AgentPair LoadRun(const RunStore& store, const std::string& id) {
  return AgentPair{id, LoadAgent(store.checkpoint_path(id, Role::kHinter).string()),
                   LoadAgent(store.checkpoint_path(id, Role::kGuesser).string())};
}

}  // namespace hintguess
