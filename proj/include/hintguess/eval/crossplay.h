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

#ifndef HINTGUESS_EVAL_CROSSPLAY_H_
#define HINTGUESS_EVAL_CROSSPLAY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hintguess/agents/agent.h"

namespace hintguess {

// Hinter and guesser from one training run.
struct AgentPair {
  std::string id;
  Agent hinter;
  Agent guesser;
};

enum class ClusterLabel { kNone, kSim, kDissim };
std::string ClusterLabelName(ClusterLabel label);

struct Cluster {
  std::vector<int> members;  // indices into CrossPlayReport::ids, ascending
  ClusterLabel label = ClusterLabel::kNone;
  double sp_mean = 0.0;
  double xp_mean = 0.0;  // ordered off-diagonal pairs within the cluster
  double exact_match_pct = -1.0;  // mean probe value when labeled
};

struct CrossPlayReport {
  std::vector<std::string> ids;
  // scores[i][j]: hinter of run i with guesser of run j.
  std::vector<std::vector<double>> scores;
  std::vector<std::vector<std::int64_t>> games;
  double sp_mean = 0.0;
  double sp_standard_error = 0.0;
  double xp_mean = 0.0;
  double xp_standard_error = 0.0;
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of;  // -1 when unclustered

  int size() const { return static_cast<int>(ids.size()); }
  double sp(int i) const { return scores[i][i]; }
};

struct CrossPlayOptions {
  std::int64_t games_per_cell = 10'000;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Fills every ordered pair. Cell (i, j) uses its own RNG stream, so results
// do not depend on scheduling. All pairs must share a game config.
CrossPlayReport CrossPlayMatrix(const std::vector<const AgentPair*>& pairs,
                                const CrossPlayOptions& options);

// Recomputes the SP/XP summary from `scores`.
void Summarize(CrossPlayReport& report);

// Connected components (size >= 2) of the graph with an edge between i != j
// when (XP(i,j) + XP(j,i)) / 2 >= threshold * min(SP_i, SP_j). Fills
// report.clusters and report.cluster_of; labels are reset.
void DetectClusters(CrossPlayReport& report, double threshold = 0.9);

// `exact_match_pct[i]`: how often run i's hinter gives the exact-match hint
// in the exact-match probe. Clusters above 50 become Sim, below 50 Dissim.
void LabelClusters(CrossPlayReport& report, const std::vector<double>& exact_match_pct);

}  // namespace hintguess

#endif  // HINTGUESS_EVAL_CROSSPLAY_H_
