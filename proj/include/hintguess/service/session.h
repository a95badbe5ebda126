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

#ifndef HINTGUESS_SERVICE_SESSION_H_
#define HINTGUESS_SERVICE_SESSION_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hintguess/agents/agent.h"
#include "hintguess/game/game.h"
#include "hintguess/service/run_store.h"

namespace hintguess {

// Protocol failure with an HTTP status and a stable machine-readable code.
class SessionError : public std::runtime_error {
 public:
  SessionError(int status, std::string code, const std::string& message,
               std::vector<std::string> legal_actions = {})
      : std::runtime_error(message), status_(status), code_(std::move(code)),
        legal_actions_(std::move(legal_actions)) {}

  int status() const { return status_; }
  const std::string& code() const { return code_; }
  const std::vector<std::string>& legal_actions() const { return legal_actions_; }
  nlohmann::json ToJson() const;

 private:
  int status_;
  std::string code_;
  std::vector<std::string> legal_actions_;
};

struct SessionGame {
  int index = 0;
  EpisodeState state;  // AwaitHint for a human hinter, AwaitGuess otherwise
  std::optional<Card> human_action;
  std::string answered_utc;
};

struct SessionRecord {
  std::string id;
  Role human_role = Role::kHinter;
  std::string checkpoint;  // path of the opponent
  std::string checkpoint_digest;
  std::uint64_t seed = 0;
  std::string created_utc;
  std::optional<std::string> source_session;
  GameConfig game;
  std::vector<SessionGame> games;
  bool closed = false;

  int answered() const;
  // Index of the first unanswered game, or nullopt.
  std::optional<int> next() const;
};

// Re-reads a session log. Throws CorruptionError for malformed lines.
SessionRecord ReadSessionFile(const std::string& path);

struct CreateSessionRequest {
  Role human_role = Role::kHinter;
  std::string checkpoint;  // path
  int games = 15;
  std::uint64_t seed = 0;
  // Human-guesser sessions may take their hints from a closed human-hinter
  // session instead of the opponent checkpoint.
  std::optional<std::string> source_session;
};

// Results of a closed session.
struct SessionScore {
  std::string session_id;
  Role human_role = Role::kHinter;
  int games = 0;
  // Human hinter: one entry per partner guesser. Human guesser: one entry
  // scoring the recorded guesses.
  std::vector<std::string> partners;
  std::vector<double> scores;
  // agreement[a][b]: fraction of games where partners a and b guessed the
  // same tuple.
  std::vector<std::vector<double>> agreement;
};

// Pairwise agreement of per-game choices; all rows must have equal length.
std::vector<std::vector<double>> AgreementMatrix(const std::vector<std::vector<Card>>& choices);

SessionScore ScoreSession(const SessionRecord& record,
                          const std::vector<std::pair<std::string, const Agent*>>& guessers,
                          std::uint64_t seed = 0);

nlohmann::json ToJson(const SessionScore& score);

// Owns live sessions. Every session has its own mutex; checkpoints are
// loaded once and shared read-only.
class SessionManager {
 public:
  explicit SessionManager(RunStore store);

  std::string Create(const CreateSessionRequest& request);
  // Prompt for the next unanswered game, or {"status": "complete"}.
  nlohmann::json Prompt(const std::string& id);
  // Acknowledgement only: no outcome fields.
  nlohmann::json Submit(const std::string& id, int game_index, const std::string& action);
  nlohmann::json Close(const std::string& id);
  // Refused (409) until the session is closed. Partner guessers default to
  // the opponent checkpoint.
  nlohmann::json Results(const std::string& id,
                         const std::vector<std::string>& partner_checkpoints = {});

  SessionRecord Snapshot(const std::string& id);
  std::shared_ptr<const Agent> Checkpoint(const std::string& path);

 private:
  struct Live {
    std::mutex mu;
    SessionRecord record;
  };
  std::shared_ptr<Live> Find(const std::string& id);
  void Append(const std::string& id, const nlohmann::json& line) const;

  RunStore store_;
  std::mutex mu_;  // guards the two maps, never held during game logic
  std::map<std::string, std::shared_ptr<Live>> sessions_;
  std::map<std::string, std::shared_ptr<const Agent>> checkpoints_;
};

}  // namespace hintguess

#endif  // HINTGUESS_SERVICE_SESSION_H_
