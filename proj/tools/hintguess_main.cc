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

// Command-line entry point: training, evaluation, and the session service.

#include <fnmatch.h>

#include <atomic>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hintguess/agents/player.h"
#include "hintguess/errors.h"
#include "hintguess/eval/analysis.h"
#include "hintguess/eval/crossplay.h"
#include "hintguess/eval/match.h"
#include "hintguess/eval/report_io.h"
#include "hintguess/game/config_io.h"
#include "hintguess/service/checkpoint.h"
#include "hintguess/service/run_store.h"
#include "hintguess/service/server.h"
#include "hintguess/service/session.h"
#include "hintguess/training/grad_audit.h"
#include "hintguess/training/presets.h"

namespace hg = hintguess;
using nlohmann::json;

namespace {

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

// Run ids in the store matching any of the shell patterns.
std::vector<std::string> MatchRuns(const hg::RunStore& store,
                                   const std::vector<std::string>& patterns) {
  std::vector<std::string> out;
  for (const std::string& id : store.ListRuns()) {
    for (const std::string& p : patterns) {
      if (fnmatch(p.c_str(), id.c_str(), 0) == 0) {
        out.push_back(id);
        break;
      }
    }
  }
  if (out.empty()) throw hg::ConfigurationError("no runs match the given patterns");
  return out;
}

std::vector<hg::AgentPair> LoadRuns(const hg::RunStore& store,
                                    const std::vector<std::string>& ids) {
  std::vector<hg::AgentPair> out;
  for (const auto& id : ids) out.push_back(hg::LoadRun(store, id));
  return out;
}

void Emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    hg::WriteTextFile(out_path, j.dump(2) + "\n");
    std::cerr << "wrote " << out_path << "\n";
  }
}

hg::GameConfig GameFromOptions(const std::string& preset, const std::string& config_path,
                               int hand_size) {
  hg::GameConfig game = config_path.empty() ? hg::Preset(preset).game
                                            : hg::LoadGameConfig(config_path);
  if (hand_size > 0) game.hand_size = hand_size;
  game.Validate();
  return game;
}

// Exact-match human% of each run's own pair.
std::vector<double> ExactMatchPct(const std::vector<hg::AgentPair>& runs, int repetitions,
                                  std::uint64_t seed) {
  std::vector<double> out;
  for (const auto& run : runs) {
    hg::AgentPlayer h(run.hinter), g(run.guesser);
    out.push_back(hg::ProbeScenarios({{&h, &g}}, repetitions, seed).at("exact_match").human_pct);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hint-guess training, evaluation and session service"};
  app.require_subcommand(1);
  std::string store_root;
  app.add_option("--store", store_root, "store root (default $HINTGUESS_STORE or ./hintguess_store)");

  // train
  auto* train = app.add_subcommand("train", "train a hinter/guesser pair into a run directory");
  std::string train_config, train_preset = "n3-desk", train_arch, train_id, train_variant,
                            lower_run;
  std::optional<std::uint64_t> train_seed;
  std::optional<std::int64_t> train_episodes;
  std::optional<double> train_lr;
  std::optional<int> obl_level;
  train->add_option("--config", train_config, "run config JSON");
  train->add_option("--preset", train_preset, "preset: full, sin-full, n3-desk, n5-desk, sin-desk");
  train->add_option("--arch", train_arch, "mlp, mlp_action_in, attn, ca2i, sa2i");
  train->add_option("--seed", train_seed);
  train->add_option("--episodes", train_episodes);
  train->add_option("--lr", train_lr);
  train->add_option("--variant", train_variant, "iql, op, obl");
  train->add_option("--obl-level", obl_level);
  train->add_option("--lower-run", lower_run, "run holding the level k-1 OBL hinter");
  train->add_option("--id", train_id, "run id (default derived from preset, arch and seed)");

  // crossplay
  auto* crossplay = app.add_subcommand("crossplay", "cross-play matrix over stored runs");
  std::vector<std::string> xp_runs;
  std::int64_t xp_games = 10'000;
  double xp_threshold = 0.9;
  int xp_probe_reps = 0, xp_threads = 1;
  std::uint64_t xp_seed = 0;
  std::string xp_out;
  crossplay->add_option("runs", xp_runs, "run id patterns")->required();
  crossplay->add_option("--games", xp_games, "games per cell");
  crossplay->add_option("--threshold", xp_threshold, "cluster edge threshold");
  crossplay->add_option("--label-probe", xp_probe_reps,
                        "exact-match probe repetitions used to label clusters (0: skip)");
  crossplay->add_option("--threads", xp_threads);
  crossplay->add_option("--seed", xp_seed);
  crossplay->add_option("--out", xp_out, "report JSON path (default stdout)");

  // probe
  auto* probe = app.add_subcommand("probe", "scenario probes for one pair");
  std::string probe_hinter, probe_guesser, probe_out;
  int probe_reps = 1000;
  std::uint64_t probe_seed = 0;
  probe->add_option("--hinter-run", probe_hinter)->required();
  probe->add_option("--guesser-run", probe_guesser, "default: the hinter's run");
  probe->add_option("--repetitions", probe_reps);
  probe->add_option("--seed", probe_seed);
  probe->add_option("--out", probe_out);

  // condmat
  auto* condmat = app.add_subcommand("condmat", "conditional probability matrix");
  std::vector<std::string> cm_runs;
  std::string cm_kind = "guess_given_hint", cm_out;
  std::int64_t cm_games = 10'000;
  bool cm_cross = false;
  std::uint64_t cm_seed = 0;
  condmat->add_option("runs", cm_runs, "run id patterns")->required();
  condmat->add_option("--kind", cm_kind, "guess_given_hint or hint_given_target");
  condmat->add_option("--games", cm_games, "games per pair");
  condmat->add_flag("--cross", cm_cross, "use all ordered pairs of distinct runs");
  condmat->add_option("--seed", cm_seed);
  condmat->add_option("--out", cm_out);

  // ordermatch
  auto* ordermatch = app.add_subcommand("ordermatch", "order-matching rates on ordinal games");
  std::string om_hinter, om_guesser;
  std::int64_t om_games = 10'000;
  std::uint64_t om_seed = 0;
  ordermatch->add_option("--hinter-run", om_hinter)->required();
  ordermatch->add_option("--guesser-run", om_guesser);
  ordermatch->add_option("--games", om_games);
  ordermatch->add_option("--seed", om_seed);

  // chance
  auto* chance = app.add_subcommand("chance", "score of a uniform-random pair");
  std::string ch_preset = "full", ch_config;
  int ch_hand = 0;
  std::int64_t ch_games = 100'000;
  std::uint64_t ch_seed = 0;
  chance->add_option("--preset", ch_preset);
  chance->add_option("--config", ch_config, "game config JSON");
  chance->add_option("--hand-size", ch_hand);
  chance->add_option("--games", ch_games);
  chance->add_option("--seed", ch_seed);
  bool ch_tuple = false;
  chance->add_flag("--tuple", ch_tuple, "random players pick uniformly among distinct tuples");

  // gradcheck
  auto* gradcheck = app.add_subcommand("gradcheck", "finite-difference gradient audit");
  std::vector<std::string> gc_arch = {"mlp", "mlp_action_in", "attn", "ca2i", "sa2i"};
  int gc_instances = 20, gc_coords = 64, gc_hand = 5;
  gradcheck->add_option("--arch", gc_arch);
  gradcheck->add_option("--instances", gc_instances);
  gradcheck->add_option("--coords", gc_coords, "coordinates per tensor (0: all)");
  gradcheck->add_option("--hand-size", gc_hand);

  // serve
  auto* serve = app.add_subcommand("serve", "start the HTTP session service");
  std::string sv_host = "127.0.0.1";
  int sv_port = 8080;
  serve->add_option("--host", sv_host);
  serve->add_option("--port", sv_port);

  // session-score
  auto* sscore = app.add_subcommand("session-score", "score closed session files offline");
  std::vector<std::string> ss_sessions, ss_partners;
  std::uint64_t ss_seed = 0;
  sscore->add_option("sessions", ss_sessions, "session JSONL files")->required();
  sscore->add_option("--partner", ss_partners, "guesser checkpoint paths");
  sscore->add_option("--seed", ss_seed);

  // export
  auto* exportc = app.add_subcommand("export", "write CSVs from JSON reports");
  std::vector<std::string> ex_reports;
  std::string ex_dir = ".";
  exportc->add_option("reports", ex_reports)->required();
  exportc->add_option("--out-dir", ex_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    const hg::RunStore store =
        hg::RunStore::Open(store_root.empty() ? std::nullopt : std::optional(store_root));

    if (*train) {
      hg::RunSpec spec;
      if (!train_config.empty()) {
        spec = hg::RunSpecFromJson(json::parse(hg::ReadTextFile(train_config)));
      } else {
        spec = hg::Preset(train_preset, train_arch.empty() ? hg::ArchitectureKind::kMlp
                                                           : hg::ParseKind(train_arch));
      }
      if (!train_arch.empty() && !train_config.empty()) {
        spec.architecture = hg::Architecture::Default(hg::ParseKind(train_arch));
      }
      if (train_seed) spec.train.seed = *train_seed;
      if (train_episodes) spec.train.episodes = *train_episodes;
      if (train_lr) spec.train.lr = *train_lr;
      if (!train_variant.empty()) spec.train.variant = hg::ParseVariant(train_variant);
      if (obl_level) spec.train.obl_level = *obl_level;
      spec.train.Validate();
      const std::string id =
          train_id.empty() ? spec.preset + "-" + hg::KindName(spec.architecture.kind) + "-" +
                                 hg::VariantName(spec.train.variant) + "-s" +
                                 std::to_string(spec.train.seed)
                           : train_id;
      std::optional<hg::Agent> lower;
      if (!lower_run.empty()) {
        lower = hg::LoadAgent(store.checkpoint_path(lower_run, hg::Role::kHinter).string());
      }
      std::signal(SIGINT, OnSignal);
      std::signal(SIGTERM, OnSignal);
      hg::TrainHooks hooks;
      hooks.stop = &g_stop;
      hooks.on_curve = [](const hg::CurvePoint& p) {
        std::fprintf(stderr, "episode %lld  eps %.3f  score %.3f  loss %.4f/%.4f\n",
                     static_cast<long long>(p.episode), p.epsilon, p.score, p.loss_hinter,
                     p.loss_guesser);
      };
      const hg::StoredRun run =
          hg::TrainAndStore(store, id, spec, lower ? &*lower : nullptr, hooks);
      std::cout << json({{"run", id},
                         {"dir", store.run_dir(id).string()},
                         {"complete", run.manifest.value("complete", false)},
                         {"hinter_digest", run.hinter_digest},
                         {"guesser_digest", run.guesser_digest}})
                       .dump(2)
                << "\n";
      return run.result.interrupted ? 130 : 0;
    }

    if (*crossplay) {
      const auto ids = MatchRuns(store, xp_runs);
      const auto runs = LoadRuns(store, ids);
      std::vector<const hg::AgentPair*> ptrs;
      for (const auto& r : runs) ptrs.push_back(&r);
      hg::CrossPlayOptions opt;
      opt.games_per_cell = xp_games;
      opt.seed = xp_seed;
      opt.threads = xp_threads;
      hg::CrossPlayReport report = hg::CrossPlayMatrix(ptrs, opt);
      hg::DetectClusters(report, xp_threshold);
      if (xp_probe_reps > 0) hg::LabelClusters(report, ExactMatchPct(runs, xp_probe_reps, xp_seed));
      Emit(hg::ToJson(report), xp_out);
      return 0;
    }

    if (*probe) {
      const hg::AgentPair h = hg::LoadRun(store, probe_hinter);
      const hg::AgentPair g = probe_guesser.empty() ? h : hg::LoadRun(store, probe_guesser);
      hg::AgentPlayer hp(h.hinter), gp(g.guesser);
      const auto report = hg::ProbeScenarios({{&hp, &gp}}, probe_reps, probe_seed,
                                             probe_guesser.empty() || probe_guesser == probe_hinter
                                                 ? "SP"
                                                 : "XP");
      Emit(hg::ToJson(report), probe_out);
      return 0;
    }

    if (*condmat) {
      const auto runs = LoadRuns(store, MatchRuns(store, cm_runs));
      std::vector<std::unique_ptr<hg::AgentPlayer>> players;
      std::vector<hg::PlayerPair> pairs;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = 0; j < runs.size(); ++j) {
          if (cm_cross ? i == j : i != j) continue;
          players.push_back(std::make_unique<hg::AgentPlayer>(runs[i].hinter));
          players.push_back(std::make_unique<hg::AgentPlayer>(runs[j].guesser));
          pairs.emplace_back(players[players.size() - 2].get(), players.back().get());
        }
      }
      if (pairs.empty()) throw hg::ConfigurationError("--cross needs at least two runs");
      const auto m = hg::BuildConditionalMatrix(pairs, runs.front().hinter.config(),
                                                hg::ParseConditionalKind(cm_kind), cm_games,
                                                cm_seed);
      Emit(hg::ToJson(m), cm_out);
      return 0;
    }

    if (*ordermatch) {
      const hg::AgentPair h = hg::LoadRun(store, om_hinter);
      const hg::AgentPair g = om_guesser.empty() ? h : hg::LoadRun(store, om_guesser);
      hg::AgentPlayer hp(h.hinter), gp(g.guesser);
      Emit(hg::ToJson(hg::OrderMatchingRate(hp, gp, h.hinter.config(), om_games, om_seed)), "");
      return 0;
    }

    if (*chance) {
      const hg::GameConfig game = GameFromOptions(ch_preset, ch_config, ch_hand);
      const auto mode = ch_tuple ? hg::RandomPlayer::Mode::kTuple : hg::RandomPlayer::Mode::kCard;
      const auto mc = hg::ChanceBaseline(game, ch_games, ch_seed, mode);
      std::printf("chance score %.4f +- %.4f (2 s.e., %lld games); exact %.6f\n", mc.mean,
                  2 * mc.standard_error, static_cast<long long>(mc.games),
                  hg::ChanceBaselineExact(game, mode));
      return 0;
    }

    if (*gradcheck) {
      double worst = 0.0;
      for (const std::string& name : gc_arch) {
        hg::GradAuditOptions opt;
        opt.instances = gc_instances;
        opt.max_coords_per_param = gc_coords;
        const auto r = hg::AuditGradients(hg::Architecture::Default(hg::ParseKind(name)),
                                          hg::GameConfig::Standard(gc_hand), opt);
        std::printf("%-14s max relative error %.3e over %d coords, %d kink skips (worst %s[%d])\n",
                    name.c_str(), r.max_relative_error, r.coords_checked, r.kinks_skipped, r.worst.worst_parameter.c_str(),
                    r.worst.worst_index);
        worst = std::max(worst, r.max_relative_error);
      }
      return worst < 1e-4 ? 0 : 1;
    }

    if (*serve) {
      hg::SessionManager sessions(store);
      std::fprintf(stderr, "serving on http://%s:%d (store %s)\n", sv_host.c_str(), sv_port,
                   store.root().string().c_str());
      return hg::Serve(sv_host, sv_port, sessions, store) ? 0 : 1;
    }

    if (*sscore) {
      std::vector<hg::Agent> partners;
      for (const auto& p : ss_partners) partners.push_back(hg::LoadAgent(p));
      json out = json::array();
      for (const std::string& path : ss_sessions) {
        const hg::SessionRecord record = hg::ReadSessionFile(path);
        std::vector<std::pair<std::string, const hg::Agent*>> guessers;
        for (std::size_t i = 0; i < partners.size(); ++i) {
          guessers.emplace_back(ss_partners[i], &partners[i]);
        }
        std::optional<hg::Agent> opponent;
        if (guessers.empty() && record.human_role == hg::Role::kHinter) {
          opponent = hg::LoadAgent(record.checkpoint);
          guessers.emplace_back(record.checkpoint, &*opponent);
        }
        out.push_back(hg::ToJson(hg::ScoreSession(record, guessers, ss_seed)));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*exportc) {
      for (const std::string& path : ex_reports) {
        const json j = json::parse(hg::ReadTextFile(path));
        const std::string stem = std::filesystem::path(path).stem().string();
        const std::filesystem::path dir(ex_dir);
        if (j.contains("scores")) {
          hg::CrossPlayReport r = hg::CrossPlayReportFromJson(j);
          hg::WriteTextFile((dir / (stem + ".csv")).string(), hg::CrossPlayCsv(r));
          // Runs grouped by cluster, as in a block-structured heatmap.
          std::vector<int> order;
          for (const auto& c : r.clusters)
            for (int m : c.members) order.push_back(m);
          for (int i = 0; i < r.size(); ++i)
            if (r.cluster_of.empty() || r.cluster_of[i] < 0) order.push_back(i);
          hg::CrossPlayReport sorted = r;
          for (int a = 0; a < r.size(); ++a) {
            sorted.ids[a] = r.ids[order[a]];
            for (int b = 0; b < r.size(); ++b) sorted.scores[a][b] = r.scores[order[a]][order[b]];
          }
          hg::WriteTextFile((dir / (stem + "_by_cluster.csv")).string(), hg::CrossPlayCsv(sorted));
        } else if (j.contains("probabilities")) {
          hg::ConditionalMatrix m;
          m.kind = hg::ParseConditionalKind(j.at("kind").get<std::string>());
          m.labels = j.at("labels").get<std::vector<std::string>>();
          m.probabilities = j.at("probabilities").get<std::vector<std::vector<double>>>();
          m.row_totals = j.at("row_totals").get<std::vector<std::int64_t>>();
          hg::WriteTextFile((dir / (stem + ".csv")).string(), hg::ConditionalCsv(m));
        } else if (j.contains("results")) {
          hg::ProbeReport p;
          p.mode = j.value("mode", std::string("SP"));
          for (const auto& r : j.at("results")) {
            p.results.push_back({r.at("scenario").get<std::string>(), r.at("human_pct").get<double>(),
                                 r.at("win_pct").get<double>(), r.at("repetitions").get<int>()});
          }
          hg::WriteTextFile((dir / (stem + ".csv")).string(), hg::ProbeCsv(p));
        } else {
          throw hg::ConfigurationError("unrecognized report: " + path);
        }
        std::cerr << "exported " << path << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
