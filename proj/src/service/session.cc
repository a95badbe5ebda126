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

#include "hintguess/service/session.h"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hintguess/agents/player.h"
#include "hintguess/errors.h"
#include "hintguess/eval/match.h"
#include "hintguess/game/config_io.h"
#include "hintguess/service/checkpoint.h"

namespace hintguess {

using nlohmann::json;

namespace {

constexpr std::uint64_t kSessionDealStream = 0x7365737364;
constexpr std::uint64_t kSessionHintStream = 0x7365737368;
constexpr std::uint64_t kSessionScoreStream = 0x7365737373;
constexpr int kMaxGames = 1000;

std::string UtcNow() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string NewSessionId() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard<std::mutex> lock(mu);
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << rng();
  return out.str();
}

std::vector<std::string> Labels(const FeatureSpaces& spaces, const std::vector<Card>& cards) {
  std::vector<std::string> out;
  for (const Card& c : cards) out.push_back(spaces.Label(c));
  return out;
}

std::vector<Card> ParseCards(const FeatureSpaces& spaces, const json& labels) {
  std::vector<Card> out;
  for (const auto& l : labels) out.push_back(spaces.Parse(l.get<std::string>()));
  return out;
}

json GameLine(const GameConfig& game, const SessionGame& g) {
  json j = {{"type", "game"},
            {"game_index", g.index},
            {"hinter_hand", Labels(game.features, g.state.hinter_hand)},
            {"guesser_hand", Labels(game.features, g.state.guesser_hand)},
            {"target_index", g.state.target_index},
            {"target", game.features.Label(g.state.target())}};
  if (g.state.hinted_card) j["hint"] = game.features.Label(*g.state.hinted_card);
  return j;
}

}  // namespace

json SessionError::ToJson() const {
  json j = {{"code", code_}, {"message", what()}};
  if (!legal_actions_.empty()) j["legal_actions"] = legal_actions_;
  return j;
}

int SessionRecord::answered() const {
  int n = 0;
  for (const SessionGame& g : games) n += g.human_action.has_value();
  return n;
}

std::optional<int> SessionRecord::next() const {
  for (const SessionGame& g : games)
    if (!g.human_action) return g.index;
  return std::nullopt;
}

SessionRecord ReadSessionFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot open session " + path);
  SessionRecord r;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "session") {
        r.id = j.at("session_id").get<std::string>();
        r.human_role = ParseRole(j.at("human_role").get<std::string>());
        r.checkpoint = j.value("checkpoint", std::string());
        r.checkpoint_digest = j.value("checkpoint_digest", std::string());
        r.seed = j.value("seed", std::uint64_t{0});
        r.created_utc = j.value("created_utc", std::string());
        if (j.contains("source_session")) r.source_session = j.at("source_session").get<std::string>();
        r.game = GameConfigFromJson(j.at("game"));
        have_header = true;
      } else if (!have_header) {
        throw CorruptionError("session record before header");
      } else if (type == "game") {
        SessionGame g;
        g.index = j.at("game_index").get<int>();
        if (g.index != static_cast<int>(r.games.size())) throw CorruptionError("game out of order");
        g.state = MakeState(r.game.features, ParseCards(r.game.features, j.at("hinter_hand")),
                            ParseCards(r.game.features, j.at("guesser_hand")),
                            j.at("target_index").get<int>());
        if (j.contains("hint")) {
          g.state = Step(r.game.features, g.state, r.game.features.Parse(j.at("hint").get<std::string>()));
        }
        r.games.push_back(std::move(g));
      } else if (type == "action") {
        const int k = j.at("game_index").get<int>();
        if (k < 0 || k >= static_cast<int>(r.games.size()) || r.games[k].human_action) {
          throw CorruptionError("bad action record");
        }
        r.games[k].human_action = r.game.features.Parse(j.at("action").get<std::string>());
        r.games[k].answered_utc = j.value("timestamp", std::string());
      } else if (type == "close") {
        r.closed = true;
      } else {
        throw CorruptionError("unknown record type " + type);
      }
    } catch (const json::exception& e) {
      throw CorruptionError(path + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const ProtocolError& e) {
      throw CorruptionError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw CorruptionError("session file has no header: " + path);
  return r;
}

std::vector<std::vector<double>> AgreementMatrix(const std::vector<std::vector<Card>>& choices) {
  const std::size_t n = choices.size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 1.0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (choices[a].size() != choices[b].size()) throw std::invalid_argument("ragged choices");
      if (choices[a].empty()) continue;
      int same = 0;
      for (std::size_t k = 0; k < choices[a].size(); ++k) same += choices[a][k] == choices[b][k];
      out[a][b] = static_cast<double>(same) / choices[a].size();
    }
  }
  return out;
}

SessionScore ScoreSession(const SessionRecord& record,
                          const std::vector<std::pair<std::string, const Agent*>>& guessers,
                          std::uint64_t seed) {
  if (!record.closed) {
    throw SessionError(409, "session_open", "results are available only after the session closes");
  }
  const FeatureSpaces& spaces = record.game.features;
  SessionScore score;
  score.session_id = record.id;
  score.human_role = record.human_role;
  std::vector<const SessionGame*> answered;
  for (const SessionGame& g : record.games)
    if (g.human_action) answered.push_back(&g);
  score.games = static_cast<int>(answered.size());

  if (record.human_role == Role::kGuesser) {
    int wins = 0;
    std::vector<Card> guesses;
    for (const SessionGame* g : answered) {
      wins += *Step(spaces, g->state, *g->human_action).reward;
      guesses.push_back(*g->human_action);
    }
    score.partners = {"human"};
    score.scores = {answered.empty() ? 0.0 : static_cast<double>(wins) / answered.size()};
    score.agreement = AgreementMatrix({guesses});
    return score;
  }

  if (guessers.empty()) throw ConfigurationError("scoring a hinter session needs a guesser");
  std::vector<std::vector<Card>> choices;
  for (const auto& [name, guesser] : guessers) {
    if (guesser->role() != Role::kGuesser) throw ConfigurationError(name + " is not a guesser");
    Rng rng = MakeRng(seed, kSessionScoreStream);
    AgentPlayer player(*guesser);
    int wins = 0;
    std::vector<Card> row;
    for (const SessionGame* g : answered) {
      const EpisodeState hinted = Step(spaces, g->state, *g->human_action);
      const Card guess = player.Act(record.game, hinted, Role::kGuesser, rng);
      wins += *Step(spaces, hinted, guess).reward;
      row.push_back(guess);
    }
    score.partners.push_back(name);
    score.scores.push_back(answered.empty() ? 0.0 : static_cast<double>(wins) / answered.size());
    choices.push_back(std::move(row));
  }
  score.agreement = AgreementMatrix(choices);
  return score;
}

json ToJson(const SessionScore& s) {
  return {{"session_id", s.session_id},
          {"human_role", RoleName(s.human_role)},
          {"games", s.games},
          {"partners", s.partners},
          {"scores", s.scores},
          {"agreement", s.agreement}};
}

SessionManager::SessionManager(RunStore store) : store_(std::move(store)) {}

std::shared_ptr<const Agent> SessionManager::Checkpoint(const std::string& path) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = checkpoints_.find(path); it != checkpoints_.end()) return it->second;
  }
  auto agent = std::make_shared<const Agent>(LoadAgent(path));
  std::lock_guard<std::mutex> lock(mu_);
  return checkpoints_.emplace(path, std::move(agent)).first->second;
}

std::shared_ptr<SessionManager::Live> SessionManager::Find(const std::string& id) {
  try {
    ValidateId(id);
  } catch (const ConfigurationError&) {
    throw SessionError(404, "not_found", "no session " + id);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = sessions_.find(id); it != sessions_.end()) return it->second;
  }
  const auto path = store_.session_path(id);
  if (!std::filesystem::exists(path)) throw SessionError(404, "not_found", "no session " + id);
  auto live = std::make_shared<Live>();
  live->record = ReadSessionFile(path.string());
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.emplace(id, std::move(live)).first->second;
}

void SessionManager::Append(const std::string& id, const json& line) const {
  const auto path = store_.session_path(id);
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::app);
  out << line.dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot append to " + path.string());
}

std::string SessionManager::Create(const CreateSessionRequest& request) {
  if (request.games <= 0 || request.games > kMaxGames) {
    throw SessionError(400, "invalid_request",
                       "games must be between 1 and " + std::to_string(kMaxGames));
  }
  SessionRecord r;
  r.id = NewSessionId();
  r.human_role = request.human_role;
  r.seed = request.seed;
  r.created_utc = UtcNow();
  r.checkpoint = request.checkpoint;

  std::shared_ptr<const Agent> opponent;
  if (!request.checkpoint.empty()) {
    try {
      opponent = Checkpoint(request.checkpoint);
      r.checkpoint_digest = LoadCheckpoint(request.checkpoint).digest;
    } catch (const std::exception& e) {
      throw SessionError(400, "invalid_checkpoint", e.what());
    }
    const Role expected = request.human_role == Role::kHinter ? Role::kGuesser : Role::kHinter;
    if (opponent->role() != expected) {
      throw SessionError(400, "invalid_checkpoint",
                         "a human " + RoleName(request.human_role) + " needs a " +
                             RoleName(expected) + " checkpoint");
    }
  }

  if (request.source_session) {
    if (request.human_role != Role::kGuesser) {
      throw SessionError(400, "invalid_request", "only guesser sessions take a source session");
    }
    const SessionRecord source = Snapshot(*request.source_session);
    if (!source.closed || source.human_role != Role::kHinter) {
      throw SessionError(400, "invalid_request", "source must be a closed human-hinter session");
    }
    r.source_session = source.id;
    r.game = source.game;
    for (const SessionGame& g : source.games) {
      if (!g.human_action) continue;
      if (static_cast<int>(r.games.size()) == request.games) break;
      SessionGame copy;
      copy.index = static_cast<int>(r.games.size());
      copy.state = Step(r.game.features, g.state, *g.human_action);
      r.games.push_back(std::move(copy));
    }
    if (r.games.empty()) throw SessionError(400, "invalid_request", "source session has no hints");
  } else {
    if (!opponent) throw SessionError(400, "invalid_checkpoint", "an opponent checkpoint is required");
    r.game = opponent->config();
    Rng deal = MakeRng(request.seed, kSessionDealStream);
    Rng hint_rng = MakeRng(request.seed, kSessionHintStream);
    for (int k = 0; k < request.games; ++k) {
      SessionGame g;
      g.index = k;
      g.state = NewGame(r.game, deal);
      if (request.human_role == Role::kGuesser) {
        const Card hint = AgentPlayer(*opponent).Act(r.game, g.state, Role::kHinter, hint_rng);
        g.state = Step(r.game.features, g.state, hint);
      }
      r.games.push_back(std::move(g));
    }
  }

  json header = {{"type", "session"},
                 {"session_id", r.id},
                 {"human_role", RoleName(r.human_role)},
                 {"checkpoint", r.checkpoint},
                 {"checkpoint_digest", r.checkpoint_digest},
                 {"seed", r.seed},
                 {"games", r.games.size()},
                 {"created_utc", r.created_utc},
                 {"game", GameConfigToJson(r.game)}};
  if (r.source_session) header["source_session"] = *r.source_session;
  Append(r.id, header);
  for (const SessionGame& g : r.games) Append(r.id, GameLine(r.game, g));

  auto live = std::make_shared<Live>();
  live->record = std::move(r);
  const std::string id = live->record.id;
  std::lock_guard<std::mutex> lock(mu_);
  sessions_.emplace(id, std::move(live));
  return id;
}

json SessionManager::Prompt(const std::string& id) {
  auto live = Find(id);
  std::lock_guard<std::mutex> lock(live->mu);
  const SessionRecord& r = live->record;
  const auto next = r.next();
  if (r.closed || !next) {
    return {{"session_id", id}, {"status", "complete"}, {"games_total", r.games.size()}};
  }
  const SessionGame& g = r.games[*next];
  const FeatureSpaces& spaces = r.game.features;
  const bool hinter = r.human_role == Role::kHinter;
  json j = {{"session_id", id},
            {"status", "awaiting_action"},
            {"game_index", g.index},
            {"games_total", r.games.size()},
            {"role", RoleName(r.human_role)},
            {"own_hand", Labels(spaces, g.state.hand(r.human_role))},
            {"partner_hand", Labels(spaces, g.state.hand(hinter ? Role::kGuesser : Role::kHinter))},
            {"legal_actions",
             Labels(spaces, LegalActions(spaces, g.state, r.human_role).actions)}};
  if (hinter) {
    j["target"] = spaces.Label(g.state.target());
  } else {
    j["hint"] = spaces.Label(*g.state.hinted_card);
  }
  return j;
}

json SessionManager::Submit(const std::string& id, int game_index, const std::string& action) {
  auto live = Find(id);
  std::lock_guard<std::mutex> lock(live->mu);
  SessionRecord& r = live->record;
  if (r.closed) throw SessionError(409, "session_closed", "session is closed");
  if (game_index < 0 || game_index >= static_cast<int>(r.games.size())) {
    throw SessionError(400, "invalid_request", "no game " + std::to_string(game_index));
  }
  SessionGame& g = r.games[game_index];
  if (g.human_action) {
    throw SessionError(409, "duplicate_submission",
                       "game " + std::to_string(game_index) + " was already answered");
  }
  if (game_index != *r.next()) {
    throw SessionError(409, "out_of_order",
                       "game " + std::to_string(*r.next()) + " must be answered first");
  }
  const FeatureSpaces& spaces = r.game.features;
  const ActionSet legal = LegalActions(spaces, g.state, r.human_role);
  std::optional<Card> card;
  try {
    card = spaces.Parse(action);
  } catch (const std::exception&) {
  }
  if (!card || !legal.Contains(spaces.Index(*card))) {
    throw SessionError(400, "illegal_action", "'" + action + "' is not in the acting hand",
                       Labels(spaces, legal.actions));
  }
  const std::string now = UtcNow();
  Append(id, {{"type", "action"},
              {"game_index", game_index},
              {"action", spaces.Label(*card)},
              {"timestamp", now}});
  g.human_action = *card;
  g.answered_utc = now;
  const int remaining = static_cast<int>(r.games.size()) - r.answered();
  if (remaining == 0) {
    Append(id, {{"type", "close"}, {"reason", "complete"}, {"timestamp", now}});
    r.closed = true;
  }
  return {{"session_id", id},
          {"accepted", true},
          {"game_index", game_index},
          {"games_remaining", remaining},
          {"session_closed", r.closed}};
}

json SessionManager::Close(const std::string& id) {
  auto live = Find(id);
  std::lock_guard<std::mutex> lock(live->mu);
  SessionRecord& r = live->record;
  if (!r.closed) {
    Append(id, {{"type", "close"}, {"reason", "requested"}, {"timestamp", UtcNow()}});
    r.closed = true;
  }
  return {{"session_id", id}, {"closed", true}, {"games_answered", r.answered()}};
}

json SessionManager::Results(const std::string& id,
                             const std::vector<std::string>& partner_checkpoints) {
  const SessionRecord r = Snapshot(id);
  if (!r.closed) {
    throw SessionError(409, "session_open", "results are available only after the session closes");
  }
  std::vector<std::pair<std::string, const Agent*>> guessers;
  std::vector<std::shared_ptr<const Agent>> hold;
  if (r.human_role == Role::kHinter) {
    std::vector<std::string> paths = partner_checkpoints;
    if (paths.empty()) paths.push_back(r.checkpoint);
    for (const std::string& p : paths) {
      try {
        hold.push_back(Checkpoint(p));
      } catch (const std::exception& e) {
        throw SessionError(400, "invalid_checkpoint", e.what());
      }
      try {
        CheckCompatible(*hold.back(), Role::kGuesser, r.game);
      } catch (const ConfigurationError& e) {
        throw SessionError(400, "invalid_checkpoint", p + ": " + e.what());
      }
      guessers.emplace_back(p, hold.back().get());
    }
  }
  return ToJson(ScoreSession(r, guessers, r.seed));
}

SessionRecord SessionManager::Snapshot(const std::string& id) {
  auto live = Find(id);
  std::lock_guard<std::mutex> lock(live->mu);
  return live->record;
}

}  // namespace hintguess
