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

#ifndef HINTGUESS_SERVICE_SERVER_H_
#define HINTGUESS_SERVICE_SERVER_H_

#include <string>

#include "httplib.h"

#include "hintguess/service/session.h"

namespace hintguess {

// Registers the session endpoints:
//   GET  /health
//   POST /sessions                   {"human_role", "checkpoint" | "run",
//                                     "games", "seed", "source_session"}
//   GET  /sessions/{id}/prompt
//   POST /sessions/{id}/actions      {"game_index", "action"}
//   POST /sessions/{id}/close
//   GET  /sessions/{id}/results[?partner=<checkpoint>...]
// Errors are {"code", "message", "legal_actions"?} with a 4xx status.
void RegisterRoutes(httplib::Server& server, SessionManager& sessions, const RunStore& store);

// Blocks until the server stops.
bool Serve(const std::string& host, int port, SessionManager& sessions, const RunStore& store);

}  // namespace hintguess

#endif  // HINTGUESS_SERVICE_SERVER_H_
