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

#include "hintguess/service/server.h"

#include "hintguess/errors.h"

namespace hintguess {

using nlohmann::json;

namespace {

constexpr char kJson[] = "application/json";

void Reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

// Runs `fn`, mapping every failure onto a structured error.
template <typename Fn>
void Guard(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const SessionError& e) {
    Reply(res, e.status(), e.ToJson());
  } catch (const json::exception& e) {
    Reply(res, 400, {{"code", "invalid_request"}, {"message", e.what()}});
  } catch (const ConfigurationError& e) {
    Reply(res, 400, {{"code", "invalid_request"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    Reply(res, 500, {{"code", "internal"}, {"message", e.what()}});
  }
}

json Body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body);
  if (!j.is_object()) throw SessionError(400, "invalid_request", "body must be a JSON object");
  return j;
}

}  // namespace

void RegisterRoutes(httplib::Server& server, SessionManager& sessions, const RunStore& store) {
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    Reply(res, 200, {{"status", "ok"}});
  });

  server.Post("/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const json body = Body(req);
      CreateSessionRequest r;
      const std::string role = body.value("human_role", std::string("hinter"));
      if (role != "hinter" && role != "guesser") {
        throw SessionError(400, "invalid_request", "human_role must be hinter or guesser");
      }
      r.human_role = ParseRole(role);
      r.checkpoint = body.value("checkpoint", std::string());
      if (body.contains("run")) {
        // The opponent plays the other role of a stored run.
        const Role opponent = r.human_role == Role::kHinter ? Role::kGuesser : Role::kHinter;
        r.checkpoint = store.checkpoint_path(body.at("run").get<std::string>(), opponent).string();
      }
      r.games = body.value("games", 15);
      r.seed = body.value("seed", std::uint64_t{0});
      if (body.contains("source_session")) {
        r.source_session = body.at("source_session").get<std::string>();
      }
      const std::string id = sessions.Create(r);
      Reply(res, 201, {{"session_id", id}, {"games", sessions.Snapshot(id).games.size()}});
    });
  });

  server.Get("/sessions/:id/prompt", [&](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] { Reply(res, 200, sessions.Prompt(req.path_params.at("id"))); });
  });

  server.Post("/sessions/:id/actions", [&](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      const json body = Body(req);
      if (!body.contains("game_index") || !body.contains("action")) {
        throw SessionError(400, "invalid_request", "game_index and action are required");
      }
      Reply(res, 200,
            sessions.Submit(req.path_params.at("id"), body.at("game_index").get<int>(),
                            body.at("action").get<std::string>()));
    });
  });

  server.Post("/sessions/:id/close", [&](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] { Reply(res, 200, sessions.Close(req.path_params.at("id"))); });
  });

  server.Get("/sessions/:id/results", [&](const httplib::Request& req, httplib::Response& res) {
    Guard(res, [&] {
      std::vector<std::string> partners;
      const auto count = req.get_param_value_count("partner");
      for (std::size_t i = 0; i < count; ++i) partners.push_back(req.get_param_value("partner", i));
      Reply(res, 200, sessions.Results(req.path_params.at("id"), partners));
    });
  });
}

bool Serve(const std::string& host, int port, SessionManager& sessions, const RunStore& store) {
  httplib::Server server;
  RegisterRoutes(server, sessions, store);
  return server.listen(host, port);
}

}  // namespace hintguess
