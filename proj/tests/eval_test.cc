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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "hintguess/errors.h"
#include "hintguess/eval/analysis.h"
#include "hintguess/eval/crossplay.h"
#include "hintguess/eval/match.h"
#include "hintguess/eval/report_io.h"

namespace hintguess {
namespace {

const FeatureSpaces kGrid = FeatureSpaces::NumbersAndLetters();

// Hints the target tuple when held, otherwise the first card.
class ExactHinter : public Player {
 public:
  Card Act(const GameConfig&, const EpisodeState& s, Role, Rng&) const override {
    for (const Card& c : s.hinter_hand)
      if (c == s.target()) return c;
    return s.hinter_hand[0];
  }
};

// Guesses the hinted tuple when held, otherwise the first card.
class CopyGuesser : public Player {
 public:
  Card Act(const GameConfig&, const EpisodeState& s, Role, Rng&) const override {
    for (const Card& c : s.guesser_hand)
      if (c == *s.hinted_card) return c;
    return s.guesser_hand[0];
  }
};

std::vector<int> Values(const std::vector<Card>& hand) {
  std::vector<int> v;
  for (const Card& c : hand) v.push_back(c[0]);
  return v;
}

// Plays a rank-matching scheme on a single ordinal feature.
class RankPlayer : public Player {
 public:
  explicit RankPlayer(bool reversed) : reversed_(reversed) {}
  Card Act(const GameConfig&, const EpisodeState& s, Role role, Rng&) const override {
    const ValueMatching m = reversed_
                                ? ReversedOrderMatching(Values(s.hinter_hand), Values(s.guesser_hand))
                                : SameOrderMatching(Values(s.hinter_hand), Values(s.guesser_hand));
    for (const auto& [h, g] : m) {
      if (role == Role::kHinter && g == s.target()[0]) return Card{h};
      if (role == Role::kGuesser && h == (*s.hinted_card)[0]) return Card{g};
    }
    return s.hand(role)[0];
  }

 private:
  bool reversed_;
};

TEST(MatchTest, ScriptedPairsAndDeterminism) {
  ExactHinter h;
  CopyGuesser g;
  MatchOptions options;
  options.games = 2000;
  options.seed = 3;
  EXPECT_DOUBLE_EQ(PlayMatch(h, g, GameConfig::Standard(1), options).mean, 1.0);
  const MatchResult a = PlayMatch(h, g, GameConfig::Standard(5), options);
  const MatchResult b = PlayMatch(h, g, GameConfig::Standard(5), options);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_GT(a.standard_error, 0.0);
  options.keep_log = true;
  EXPECT_EQ(PlayMatch(h, g, GameConfig::Standard(5), options).log.size(), 2000u);
}

TEST(ChanceTest, ExactFormulasForBothRandomModes) {
  // N=3 on 9 tuples: card-uniform 1/3 + 2/27; tuple-uniform E[1/D] = 285/729.
  const GameConfig n3 = GameConfig::Standard(3);
  EXPECT_NEAR(ChanceBaselineExact(n3), 11.0 / 27.0, 1e-15);
  EXPECT_NEAR(ChanceBaselineExact(n3, RandomPlayer::Mode::kTuple), 285.0 / 729.0, 1e-15);
  for (auto mode : {RandomPlayer::Mode::kCard, RandomPlayer::Mode::kTuple}) {
    const MatchResult mc = ChanceBaseline(n3, 200'000, 1, mode);
    EXPECT_NEAR(mc.mean, ChanceBaselineExact(n3, mode), 4 * mc.standard_error);
  }
}

TEST(CompatibilityTest, FlatNetworksNeedTheirHandSize) {
  const Agent mlp(Architecture::Default(ArchitectureKind::kMlp), GameConfig::Standard(5),
                  Role::kHinter, 1);
  const Agent sa2i(Architecture::Default(ArchitectureKind::kSa2i), GameConfig::Standard(5),
                   Role::kHinter, 1);
  EXPECT_THROW(CheckCompatible(mlp, Role::kHinter, GameConfig::Standard(3)), ConfigurationError);
  EXPECT_NO_THROW(CheckCompatible(sa2i, Role::kHinter, GameConfig::Standard(3)));
  EXPECT_THROW(CheckCompatible(sa2i, Role::kGuesser, GameConfig::Standard(5)), ConfigurationError);
  EXPECT_THROW(CheckCompatible(sa2i, Role::kHinter, GameConfig::OrdinalSinusoidal(3, 0, 19, 8)),
               ConfigurationError);
}

CrossPlayReport Fixture() {
  CrossPlayReport r;
  r.ids = {"a", "b", "c", "d", "e"};
  r.scores = {{0.90, 0.88, 0.30, 0.31, 0.40},
              {0.89, 0.90, 0.29, 0.30, 0.41},
              {0.30, 0.31, 0.80, 0.79, 0.40},
              {0.29, 0.30, 0.78, 0.80, 0.39},
              {0.40, 0.41, 0.40, 0.39, 0.95}};
  r.games.assign(5, std::vector<std::int64_t>(5, 1000));
  Summarize(r);
  return r;
}

TEST(ClusterTest, BlockDiagonalMatrixGivesTwoClusters) {
  CrossPlayReport r = Fixture();
  EXPECT_NEAR(r.sp_mean, (0.9 + 0.9 + 0.8 + 0.8 + 0.95) / 5, 1e-12);
  DetectClusters(r, 0.9);
  ASSERT_EQ(r.clusters.size(), 2u);
  EXPECT_EQ(r.clusters[0].members, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.clusters[1].members, (std::vector<int>{2, 3}));
  EXPECT_EQ(r.cluster_of, (std::vector<int>{0, 0, 1, 1, -1}));
  EXPECT_NEAR(r.clusters[0].xp_mean, (0.88 + 0.89) / 2, 1e-12);
  EXPECT_NEAR(r.clusters[1].sp_mean, 0.8, 1e-12);

  LabelClusters(r, {100, 96, 0, 4, 50});
  EXPECT_EQ(r.clusters[0].label, ClusterLabel::kSim);
  EXPECT_EQ(r.clusters[1].label, ClusterLabel::kDissim);
  EXPECT_NEAR(r.clusters[0].exact_match_pct, 98, 1e-12);

  DetectClusters(r, 0.3);
  EXPECT_EQ(r.clusters.size(), 1u);
}

TEST(ClusterTest, PartitionIsInvariantToRunOrder) {
  const CrossPlayReport base = Fixture();
  const std::vector<int> perm = {3, 4, 0, 2, 1};  // new index i holds old run perm[i]
  CrossPlayReport p;
  for (int i = 0; i < 5; ++i) {
    p.ids.push_back(base.ids[perm[i]]);
    p.scores.emplace_back();
    for (int j = 0; j < 5; ++j) p.scores[i].push_back(base.scores[perm[i]][perm[j]]);
  }
  p.games = base.games;
  Summarize(p);
  DetectClusters(p, 0.9);
  CrossPlayReport b = base;
  DetectClusters(b, 0.9);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const bool together_p = p.cluster_of[i] >= 0 && p.cluster_of[i] == p.cluster_of[j];
      const bool together_b =
          b.cluster_of[perm[i]] >= 0 && b.cluster_of[perm[i]] == b.cluster_of[perm[j]];
      EXPECT_EQ(together_p, together_b);
    }
  }
}

TEST(CrossPlayTest, MatrixIsIndependentOfThreadCount) {
  std::vector<AgentPair> runs;
  const GameConfig game = GameConfig::Standard(3);
  const Architecture arch = Architecture::Default(ArchitectureKind::kAttn);
  for (int s = 0; s < 3; ++s) {
    runs.push_back({"r" + std::to_string(s), Agent(arch, game, Role::kHinter, s),
                    Agent(arch, game, Role::kGuesser, s)});
  }
  std::vector<const AgentPair*> ptrs;
  for (const auto& r : runs) ptrs.push_back(&r);
  CrossPlayOptions options;
  options.games_per_cell = 300;
  options.seed = 5;
  const CrossPlayReport one = CrossPlayMatrix(ptrs, options);
  options.threads = 3;
  const CrossPlayReport three = CrossPlayMatrix(ptrs, options);
  EXPECT_EQ(one.scores, three.scores);
  EXPECT_EQ(one.games[0][1], 300);
  EXPECT_DOUBLE_EQ(one.sp(1), PlayMatch(runs[1].hinter, runs[1].guesser, game, [] {
                     MatchOptions m;
                     m.games = 300;
                     m.seed = 5 * 1000003 + 4;
                     return m;
                   }()).mean);

  const CrossPlayReport back = CrossPlayReportFromJson(ToJson(one));
  EXPECT_EQ(back.scores, one.scores);
  EXPECT_EQ(back.ids, one.ids);
  const std::string csv = CrossPlayCsv(one);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(ConditionalTest, RowsAreDistributions) {
  ExactHinter h;
  CopyGuesser g;
  for (ConditionalKind kind : {ConditionalKind::kGuessGivenHint, ConditionalKind::kHintGivenTarget}) {
    const ConditionalMatrix m =
        BuildConditionalMatrix({{&h, &g}}, GameConfig::Standard(3), kind, 5000, 1);
    ASSERT_EQ(m.labels.size(), 9u);
    EXPECT_EQ(m.labels[4], "2B");
    for (std::size_t r = 0; r < 9; ++r) {
      const double sum = std::accumulate(m.probabilities[r].begin(), m.probabilities[r].end(), 0.0);
      if (m.row_totals[r] > 0) {
        EXPECT_NEAR(sum, 1.0, 1e-12);
      } else {
        EXPECT_EQ(sum, 0.0);
      }
    }
    // Exact-match play makes the diagonal the mode of every row.
    for (std::size_t r = 0; r < 9; ++r) {
      EXPECT_EQ(std::max_element(m.probabilities[r].begin(), m.probabilities[r].end()) -
                    m.probabilities[r].begin(),
                static_cast<long>(r));
    }
  }
}

TEST(ProbeTest, ScriptedExactMatchPairHitsTheProbes) {
  ExactHinter h;
  CopyGuesser g;
  const ProbeReport r = ProbeScenarios({{&h, &g}}, 50, 1);
  ASSERT_EQ(r.results.size(), 4u);
  EXPECT_EQ(r.at("exact_match").human_pct, 100.0);
  EXPECT_EQ(r.at("exact_match").win_pct, 100.0);
  EXPECT_EQ(r.at("exact_match").repetitions, 50);
  EXPECT_THROW(r.at("nope"), std::out_of_range);
  const std::string csv = ProbeCsv(r);
  EXPECT_NE(csv.find("exact_match,SP,100"), std::string::npos);
}

TEST(OrderMatchingTest, SchemesOnTheWorkedExample) {
  EXPECT_EQ(SameOrderMatching({3, 1, 2}, {4, 2, 3}),
            (ValueMatching{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(ReversedOrderMatching({3, 1, 2}, {4, 2, 3}),
            (ValueMatching{{1, 4}, {2, 3}, {3, 2}}));
  EXPECT_THROW(SameOrderMatching({1}, {1, 2}), std::invalid_argument);
}

TEST(OrderMatchingTest, ScriptedRankPlayersFollowTheirScheme) {
  const GameConfig game = GameConfig::OrdinalSinusoidal(3, 0, 19, 8);
  const RankPlayer same(false), reversed(true);
  const OrderMatchingResult s = OrderMatchingRate(same, same, game, 2000, 1);
  EXPECT_EQ(s.same_order_pct, 100.0);
  EXPECT_LT(s.reversed_order_pct, 100.0);
  const OrderMatchingResult r = OrderMatchingRate(reversed, reversed, game, 2000, 1);
  EXPECT_EQ(r.reversed_order_pct, 100.0);
  // Distinct cards make both schemes win every game.
  MatchOptions options;
  options.deal = Deal::kWithoutReplacement;
  options.games = 500;
  EXPECT_EQ(PlayMatch(same, same, game, options).mean, 1.0);
  EXPECT_THROW(OrderMatchingRate(same, same, GameConfig::Standard(3), 10, 1), ConfigurationError);
}

}  // namespace
}  // namespace hintguess
