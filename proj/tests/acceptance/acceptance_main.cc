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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails. Trained runs are cached in a run
// store keyed by a digest of their spec, so a second invocation only
// evaluates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hintguess/agents/player.h"
#include "hintguess/eval/analysis.h"
#include "hintguess/eval/crossplay.h"
#include "hintguess/eval/match.h"
#include "hintguess/eval/report_io.h"
#include "hintguess/game/encoding.h"
#include "hintguess/service/checkpoint.h"
#include "hintguess/service/run_store.h"
#include "hintguess/training/grad_audit.h"
#include "hintguess/training/presets.h"
#include "hintguess/training/trainer.h"

namespace hg = hintguess;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Monte Carlo oracle, 1M games, seed 2024.
constexpr double kPinnedChanceN3 = 0.407386;
constexpr double kPinnedChanceN7 = 0.237471;

constexpr int kSeparationSeeds = 8;
constexpr int kSinusoidalSeeds = 6;
constexpr int kOblSeeds = 2;
constexpr std::int64_t kGamesPerCell = 10'000;
constexpr int kProbeRepetitions = 1'000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

hg::FeatureSequence RandomObservation(const hg::GameConfig& config, hg::Role role, hg::Rng& rng) {
  hg::EpisodeState s = hg::NewGame(config, rng);
  if (role == hg::Role::kGuesser) {
    const hg::ActionSet hints = hg::LegalActions(config.features, s, hg::Role::kHinter);
    s = hg::Step(config.features, s, hints.actions[hg::UniformInt(rng, hints.size())]);
  }
  return hg::EncodeObservation(config, s, role, rng);
}

class Acceptance {
 public:
  Acceptance(hg::RunStore store, int threads) : store_(std::move(store)), threads_(threads) {}

  Outcome GradientCorrectness() const {
    const Timer timer;
    double worst = 0.0;
    std::string per_kind;
    for (hg::ArchitectureKind kind : hg::kAllKinds) {
      hg::GradAuditOptions options;
      options.instances = 20;
      options.step = 1e-5;
      options.seed = 1;
      options.max_coords_per_param = 0;
      const hg::GradAuditResult r =
          hg::AuditGradients(hg::Architecture::Default(kind), hg::GameConfig::Standard(5), options);
      worst = std::max(worst, r.max_relative_error);
      per_kind += Format(" %s=%.1e", hg::KindName(kind).c_str(), r.max_relative_error);
    }
    const double t = timer.seconds();
    return {worst < 1e-4 && t < 300.0,
            Format("max relative error %.2e (< 1e-4) in %.0f s (< 300);", worst, t) + per_kind};
  }

  Outcome ChanceBaseline() const {
    const Timer timer;
    const hg::MatchResult n5 = hg::ChanceBaseline(hg::GameConfig::Standard(5), 100'000, 7);
    const double t = timer.seconds();
    // The pinned values must agree with the closed form of the same player.
    const auto agrees = [](double pinned, int n) {
      const double p = hg::ChanceBaselineExact(hg::GameConfig::Standard(n));
      return std::abs(pinned - p) < 4.0 * std::sqrt(p * (1 - p) / 1e6);
    };
    const bool pass = std::abs(n5.mean - 0.28) <= 0.01 && t < 60.0 && agrees(kPinnedChanceN3, 3) &&
                      agrees(kPinnedChanceN7, 7);
    return {pass, Format("N=5 %.4f over 100K games (0.28 +- 0.01) in %.1f s; pinned N=3 %.4f, "
                         "N=7 %.4f",
                         n5.mean, t, kPinnedChanceN3, kPinnedChanceN7)};
  }

  Outcome Legality() const {
    std::int64_t decisions = 0, illegal = 0;
    hg::Rng rng = hg::MakeRng(3);
    for (hg::ArchitectureKind kind : hg::kAllKinds) {
      for (double epsilon : {0.0, 0.5, 1.0}) {
        for (int i = 0; i < 100'000; ++i) {
          const hg::Role role = i % 2 ? hg::Role::kGuesser : hg::Role::kHinter;
          const hg::Agent& agent = AgentFor(kind, role);
          const hg::FeatureSequence obs = RandomObservation(agent.config(), role, rng);
          const int a = hg::SelectAction(agent.QValues(obs), epsilon, rng);
          illegal += !obs.legal.Contains(a);
          ++decisions;
        }
      }
    }
    return {illegal == 0,
            Format("%lld illegal of %lld decisions (100K per architecture and epsilon)",
                   static_cast<long long>(illegal), static_cast<long long>(decisions))};
  }

  Outcome PermutationInvariance() const {
    double worst = 0.0;
    hg::Rng rng = hg::MakeRng(4);
    int cases = 0;
    for (hg::ArchitectureKind kind :
         {hg::ArchitectureKind::kAttn, hg::ArchitectureKind::kCa2i, hg::ArchitectureKind::kSa2i}) {
      for (int i = 0; i < 1000; ++i, ++cases) {
        const hg::Role role = i % 2 ? hg::Role::kGuesser : hg::Role::kHinter;
        const hg::Agent& agent = AgentFor(kind, role);
        const hg::FeatureSequence obs = RandomObservation(agent.config(), role, rng);
        std::vector<int> order(obs.length());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        hg::FeatureSequence shuffled = obs;
        for (int r = 0; r < obs.length(); ++r) {
          std::copy(obs.elements.row(order[r]).begin(), obs.elements.row(order[r]).end(),
                    shuffled.elements.row(r).begin());
          shuffled.roles[r] = obs.roles[order[r]];
        }
        const hg::QVector a = agent.QValues(obs), b = agent.QValues(shuffled);
        for (std::size_t k = 0; k < a.values.size(); ++k) {
          worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
        }
      }
    }
    return {worst <= 1e-9,
            Format("max |dQ| %.2e (<= 1e-9) over %d cases per architecture", worst, cases / 3)};
  }

  Outcome Separation() {
    const hg::CrossPlayReport& mlp = Report("mlp", SeparationRuns(hg::ArchitectureKind::kMlp));
    const hg::CrossPlayReport& sa2i = SeparationReport();
    const bool mlp_sp = mlp.sp_mean >= 0.80;
    const bool mlp_xp = std::abs(mlp.xp_mean - kPinnedChanceN3) <= 0.10;
    const hg::Cluster* best = nullptr;
    for (const hg::Cluster& c : sa2i.clusters) {
      if (c.members.size() >= 2 && std::abs(c.xp_mean - c.sp_mean) <= 0.05 &&
          (!best || c.members.size() > best->members.size())) {
        best = &c;
      }
    }
    std::string detail = Format("MLP SP %.3f (>= 0.80), XP %.3f (chance %.3f +- 0.10); SA2I SP "
                                "%.3f, %zu cluster(s)",
                                mlp.sp_mean, mlp.xp_mean, kPinnedChanceN3, sa2i.sp_mean,
                                sa2i.clusters.size());
    for (const hg::Cluster& c : sa2i.clusters) {
      detail += Format(" [%zu seeds, %s, SP %.3f XP %.3f]", c.members.size(),
                       hg::ClusterLabelName(c.label).c_str(), c.sp_mean, c.xp_mean);
    }
    return {mlp_sp && mlp_xp && best != nullptr, detail};
  }

  Outcome Probes() {
    const hg::CrossPlayReport& report = SeparationReport();
    const auto pooled = [&](hg::ClusterLabel label) -> std::optional<hg::ProbeReport> {
      std::vector<hg::AgentPlayer> players;
      for (const hg::Cluster& c : report.clusters) {
        if (c.label != label) continue;
        for (int m : c.members) {
          players.emplace_back(sa2i_runs_[m].hinter);
          players.emplace_back(sa2i_runs_[m].guesser);
        }
      }
      if (players.empty()) return std::nullopt;
      std::vector<hg::PlayerPair> pairs;
      for (std::size_t k = 0; k < players.size(); k += 2) pairs.push_back({&players[k], &players[k + 1]});
      return hg::ProbeScenarios(pairs, kProbeRepetitions, 11);
    };
    const std::optional<hg::ProbeReport> sim = pooled(hg::ClusterLabel::kSim);
    if (!sim) return {false, "no Sim cluster among the SA2I seeds"};
    const hg::ProbeResult& exact = sim->at("exact_match");
    const hg::ProbeResult& exclusive = sim->at("mutual_exclusivity");
    bool pass = std::abs(exact.human_pct - 100.0) <= 2.0 && std::abs(exact.win_pct - 100.0) <= 2.0 &&
                exclusive.human_pct >= 90.0;
    std::string detail = Format("Sim exact-match human %.1f%% win %.1f%% (100 +- 2), mutual "
                                "exclusivity human %.1f%% (>= 90)",
                                exact.human_pct, exact.win_pct, exclusive.human_pct);
    if (const auto dissim = pooled(hg::ClusterLabel::kDissim)) {
      const double h = dissim->at("exact_match").human_pct;
      pass = pass && h <= 10.0;
      detail += Format("; Dissim exact-match human %.1f%% (<= 10)", h);
    } else {
      detail += "; no Dissim cluster";
    }
    return {pass, detail};
  }

  Outcome SinusoidalOrdering() {
    std::vector<hg::AgentPair> runs;
    for (int s = 1; s <= kSinusoidalSeeds; ++s) {
      hg::RunSpec spec = hg::Preset("sin-desk", hg::ArchitectureKind::kSa2i);
      spec.train.seed = s;
      runs.push_back(Ensure("sin-sa2i-s" + std::to_string(s), spec));
    }
    hg::CrossPlayReport report = Report("sin", runs);
    std::string detail = Format("SP %.3f XP %.3f, %zu cluster(s)", report.sp_mean, report.xp_mean,
                                report.clusters.size());
    bool pass = !report.clusters.empty();
    for (const hg::Cluster& c : report.clusters) {
      double same = 0.0, reversed = 0.0;
      for (int m : c.members) {
        const hg::AgentPlayer hinter(runs[m].hinter), guesser(runs[m].guesser);
        const hg::OrderMatchingResult r =
            hg::OrderMatchingRate(hinter, guesser, runs[m].hinter.config(), kGamesPerCell, 13 + m);
        same += r.same_order_pct / c.members.size();
        reversed += r.reversed_order_pct / c.members.size();
      }
      const double rate = std::max(same, reversed);
      pass = pass && rate >= 90.0 && c.xp_mean >= 0.85;
      detail += Format(" [%zu seeds: same-order %.1f%% reversed %.1f%% (>= 90), XP %.3f (>= 0.85)]",
                       c.members.size(), same, reversed, c.xp_mean);
    }
    return {pass, detail};
  }

  Outcome Baselines() {
    double obl_sp = 0.0;
    hg::GameConfig obl_game;
    for (int s = 1; s <= kOblSeeds; ++s) {
      hg::RunSpec spec = hg::Preset("n5-desk", hg::ArchitectureKind::kMlp);
      spec.train.variant = hg::Variant::kObl;
      spec.train.obl_level = 1;
      spec.train.seed = s;
      const hg::AgentPair pair = Ensure("obl1-mlp-s" + std::to_string(s), spec);
      hg::MatchOptions options;
      options.games = kGamesPerCell;
      options.seed = 17 + s;
      obl_sp += hg::PlayMatch(pair.hinter, pair.guesser, options).mean / kOblSeeds;
      obl_game = spec.game;
    }
    const double chance = hg::ChanceBaselineExact(obl_game);

    hg::RunSpec iql = hg::Preset("n3-desk", hg::ArchitectureKind::kSa2i);
    iql.train.episodes = 50'000;
    iql.train.curve_interval = 1'000;
    iql.train.seed = 21;
    hg::RunSpec op = iql;
    op.train.variant = hg::Variant::kOtherPlay;
    op.train.identity_symmetry_only = true;
    const hg::TrainResult a = hg::Train(iql.train, iql.game, iql.architecture);
    const hg::TrainResult b = hg::Train(op.train, op.game, op.architecture);
    bool bitwise = a.hinter.params() == b.hinter.params() && a.guesser.params() == b.guesser.params() &&
                   a.curve.size() == b.curve.size();
    for (std::size_t i = 0; bitwise && i < a.curve.size(); ++i) {
      bitwise = a.curve[i].score == b.curve[i].score &&
                a.curve[i].loss_hinter == b.curve[i].loss_hinter &&
                a.curve[i].loss_guesser == b.curve[i].loss_guesser;
    }
    return {std::abs(obl_sp - chance) <= 0.05 && bitwise,
            Format("OBL level-1 SP %.3f vs chance %.3f (+- 0.05); OP identity group %s IQL over "
                   "%zu curve points",
                   obl_sp, chance, bitwise ? "matches" : "differs from", a.curve.size())};
  }

  Outcome Persistence() const {
    const fs::path scratch = store_.root() / "scratch";
    fs::remove_all(scratch);
    hg::RunSpec spec = hg::Preset("n3-desk", hg::ArchitectureKind::kSa2i);
    spec.train.episodes = 20'000;
    spec.train.seed = 5;
    const hg::RunStore a(scratch / "a"), b(scratch / "b");
    const hg::StoredRun ra = hg::TrainAndStore(a, "det", spec);
    const hg::StoredRun rb = hg::TrainAndStore(b, "det", spec);
    const bool digests =
        ra.hinter_digest == rb.hinter_digest && ra.guesser_digest == rb.guesser_digest;

    const hg::AgentPair loaded = hg::LoadRun(a, "det");
    hg::Rng rng = hg::MakeRng(6);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
      const hg::Role role = i % 2 ? hg::Role::kGuesser : hg::Role::kHinter;
      const hg::Agent& live = role == hg::Role::kHinter ? ra.result.hinter : ra.result.guesser;
      const hg::Agent& back = role == hg::Role::kHinter ? loaded.hinter : loaded.guesser;
      const hg::FeatureSequence obs = RandomObservation(spec.game, role, rng);
      mismatches += live.QValues(obs).values != back.QValues(obs).values;
    }
    fs::remove_all(scratch);
    return {digests && mismatches == 0,
            Format("digests %s across identical seeds; %d of 1000 reloaded q_values differ",
                   digests ? "equal" : "differ", mismatches)};
  }

 private:
  const hg::Agent& AgentFor(hg::ArchitectureKind kind, hg::Role role) const {
    const auto key = std::make_pair(kind, role);
    auto it = fresh_.find(key);
    if (it == fresh_.end()) {
      it = fresh_.emplace(key, hg::Agent(hg::Architecture::Default(kind), hg::GameConfig::Standard(5),
                                         role, 100 + static_cast<int>(kind)))
               .first;
    }
    return it->second;
  }

  // Loads a completed run, training it first when absent. The id carries a
  // digest of the spec so that a changed preset never reuses stale weights.
  hg::AgentPair Ensure(const std::string& name, const hg::RunSpec& spec) {
    const std::string id = name + "-" + hg::Sha256Hex(hg::RunSpecToJson(spec).dump()).substr(0, 8);
    if (!store_.IsComplete(id)) {
      std::fprintf(stderr, "training %s (%lld episodes)\n", id.c_str(),
                   static_cast<long long>(spec.train.episodes));
      const Timer timer;
      hg::TrainAndStore(store_, id, spec);
      std::fprintf(stderr, "  done in %.0f s\n", timer.seconds());
    }
    return hg::LoadRun(store_, id);
  }

  std::vector<hg::AgentPair> SeparationRuns(hg::ArchitectureKind kind) {
    std::vector<hg::AgentPair> runs;
    for (int s = 1; s <= kSeparationSeeds; ++s) {
      hg::RunSpec spec = hg::Preset("n3-desk", kind);
      spec.train.seed = s;
      runs.push_back(Ensure("n3-" + hg::KindName(kind) + "-s" + std::to_string(s), spec));
    }
    return runs;
  }

  hg::CrossPlayReport& Report(const std::string& name, const std::vector<hg::AgentPair>& runs) {
    std::vector<const hg::AgentPair*> pointers;
    for (const auto& r : runs) pointers.push_back(&r);
    hg::CrossPlayOptions options;
    options.games_per_cell = kGamesPerCell;
    options.seed = 9;
    options.threads = threads_;
    hg::CrossPlayReport report = hg::CrossPlayMatrix(pointers, options);
    hg::DetectClusters(report);
    hg::WriteTextFile((store_.root() / ("crossplay_" + name + ".json")).string(),
                      hg::ToJson(report).dump(2));
    return reports_[name] = std::move(report);
  }

  // SA2I cross-play with clusters labeled by the exact-match probe.
  const hg::CrossPlayReport& SeparationReport() {
    if (reports_.contains("sa2i")) return reports_.at("sa2i");
    sa2i_runs_ = SeparationRuns(hg::ArchitectureKind::kSa2i);
    hg::CrossPlayReport& report = Report("sa2i", sa2i_runs_);
    std::vector<double> exact;
    for (const hg::AgentPair& run : sa2i_runs_) {
      const hg::AgentPlayer hinter(run.hinter), guesser(run.guesser);
      exact.push_back(
          hg::ProbeScenarios({{&hinter, &guesser}}, kProbeRepetitions, 12).at("exact_match").human_pct);
    }
    hg::LabelClusters(report, exact);
    hg::WriteTextFile((store_.root() / "crossplay_sa2i.json").string(), hg::ToJson(report).dump(2));
    return report;
  }

  hg::RunStore store_;
  int threads_;
  mutable std::map<std::pair<hg::ArchitectureKind, hg::Role>, hg::Agent> fresh_;
  std::map<std::string, hg::CrossPlayReport> reports_;
  std::vector<hg::AgentPair> sa2i_runs_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hint-guess acceptance checks"};
  std::string store_root = "acceptance_store";
  std::vector<int> only;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--store", store_root, "run store for cached training runs");
  app.add_option("--only", only, "criteria to run (default: all)")->check(CLI::Range(1, 9));
  app.add_option("--threads", threads, "evaluation threads");
  CLI11_PARSE(app, argc, argv);

  Acceptance acceptance(hg::RunStore(store_root), threads);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gradient correctness", [&] { return acceptance.GradientCorrectness(); }},
      {"chance baseline", [&] { return acceptance.ChanceBaseline(); }},
      {"masking and legality", [&] { return acceptance.Legality(); }},
      {"permutation invariance", [&] { return acceptance.PermutationInvariance(); }},
      {"architecture separation", [&] { return acceptance.Separation(); }},
      {"scenario probes", [&] { return acceptance.Probes(); }},
      {"sinusoidal ordering", [&] { return acceptance.SinusoidalOrdering(); }},
      {"baseline sanity", [&] { return acceptance.Baselines(); }},
      {"determinism and persistence", [&] { return acceptance.Persistence(); }},
  };
  const std::set<int> selected(only.begin(), only.end());
  int failures = 0;
  json summary = json::array();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.contains(number)) continue;
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("%s %d %s: %s\n", outcome.pass ? "PASS" : "FAIL", number, criteria[i].first.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
    summary.push_back({{"criterion", number},
                       {"name", criteria[i].first},
                       {"pass", outcome.pass},
                       {"detail", outcome.detail}});
  }
  hg::WriteTextFile((fs::path(store_root) / "acceptance.json").string(), summary.dump(2));
  return failures == 0 ? 0 : 1;
}
