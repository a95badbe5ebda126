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

#include "hintguess/eval/crossplay.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "hintguess/errors.h"
#include "hintguess/eval/match.h"

namespace hintguess {
namespace {

void MeanAndError(const std::vector<double>& xs, double& mean, double& error) {
  mean = error = 0.0;
  if (xs.empty()) return;
  mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() < 2) return;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  error = std::sqrt(ss / (xs.size() - 1) / xs.size());
}

}  // namespace

std::string ClusterLabelName(ClusterLabel label) {
  switch (label) {
    case ClusterLabel::kNone:
      return "none";
    case ClusterLabel::kSim:
      return "Sim";
    case ClusterLabel::kDissim:
      return "Dissim";
  }
  return "?";
}

CrossPlayReport CrossPlayMatrix(const std::vector<const AgentPair*>& pairs,
                                const CrossPlayOptions& options) {
  if (pairs.empty()) throw ConfigurationError("cross-play needs at least one run");
  const GameConfig& game = pairs.front()->hinter.config();
  for (const AgentPair* p : pairs) {
    if (!(p->hinter.config() == game) || !(p->guesser.config() == game)) {
      throw ConfigurationError("cross-play runs use different game configs");
    }
  }
  const int n = static_cast<int>(pairs.size());
  CrossPlayReport report;
  for (const AgentPair* p : pairs) report.ids.push_back(p->id);
  report.scores.assign(n, std::vector<double>(n, 0.0));
  report.games.assign(n, std::vector<std::int64_t>(n, options.games_per_cell));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (int cell = next++; cell < n * n; cell = next++) {
      const int i = cell / n, j = cell % n;
      MatchOptions m;
      m.games = options.games_per_cell;
      m.seed = options.seed * 1000003u + static_cast<std::uint64_t>(cell);
      try {
        report.scores[i][j] = PlayMatch(pairs[i]->hinter, pairs[j]->guesser, game, m).mean;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min(options.threads, n * n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  Summarize(report);
  return report;
}

void Summarize(CrossPlayReport& report) {
  const int n = report.size();
  std::vector<double> sp, xp;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) (i == j ? sp : xp).push_back(report.scores[i][j]);
  }
  MeanAndError(sp, report.sp_mean, report.sp_standard_error);
  MeanAndError(xp, report.xp_mean, report.xp_standard_error);
}

void DetectClusters(CrossPlayReport& report, double threshold) {
  const int n = report.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double xp = 0.5 * (report.scores[i][j] + report.scores[j][i]);
      if (xp >= threshold * std::min(report.sp(i), report.sp(j))) {
        const int a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);

  report.clusters.clear();
  report.cluster_of.assign(n, -1);
  for (auto& members : groups) {
    if (members.size() < 2) continue;
    Cluster c;
    c.members = members;
    double sp = 0.0, xp = 0.0;
    for (int i : members) {
      sp += report.sp(i);
      for (int j : members)
        if (i != j) xp += report.scores[i][j];
    }
    const double m = static_cast<double>(members.size());
    c.sp_mean = sp / m;
    c.xp_mean = xp / (m * (m - 1));
    for (int i : members) report.cluster_of[i] = static_cast<int>(report.clusters.size());
    report.clusters.push_back(std::move(c));
  }
}

void LabelClusters(CrossPlayReport& report, const std::vector<double>& exact_match_pct) {
  if (static_cast<int>(exact_match_pct.size()) != report.size()) {
    throw ConfigurationError("one probe value per run is required");
  }
  for (Cluster& c : report.clusters) {
    double sum = 0.0;
    for (int i : c.members) sum += exact_match_pct[i];
    c.exact_match_pct = sum / c.members.size();
    c.label = c.exact_match_pct > 50.0   ? ClusterLabel::kSim
              : c.exact_match_pct < 50.0 ? ClusterLabel::kDissim
                                         : ClusterLabel::kNone;
  }
}

}  // namespace hintguess
