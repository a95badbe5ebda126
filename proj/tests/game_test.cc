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
#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "hintguess/errors.h"
#include "hintguess/game/config_io.h"
#include "hintguess/game/encoding.h"
#include "hintguess/game/game.h"
#include "hintguess/game/scenarios.h"
#include "hintguess/game/symmetry.h"

namespace hintguess {
namespace {

const FeatureSpaces kGrid = FeatureSpaces::NumbersAndLetters();

Card C(const char* label) { return kGrid.Parse(label); }

std::vector<Card> Hand(std::initializer_list<const char*> labels) {
  std::vector<Card> out;
  for (const char* l : labels) out.push_back(C(l));
  return out;
}

// Chi-square statistic of observed counts against a uniform expectation.
double ChiSquare(const std::map<long long, int>& counts, int cells, int total) {
  const double expected = static_cast<double>(total) / cells;
  double chi = 0.0;
  for (int c = 0; c < cells; ++c) {
    const auto it = counts.find(c);
    const double o = it == counts.end() ? 0.0 : it->second;
    chi += (o - expected) * (o - expected) / expected;
  }
  return chi;
}

TEST(FeaturesTest, GridIndexAndLabelsRoundTrip) {
  EXPECT_EQ(kGrid.grid_size(), 9);
  for (int i = 0; i < 9; ++i) {
    const Card c = kGrid.CardAt(i);
    EXPECT_EQ(kGrid.Index(c), i);
    EXPECT_EQ(kGrid.Parse(kGrid.Label(c)), c);
  }
  EXPECT_EQ(kGrid.Label(kGrid.CardAt(4)), "2B");
  const FeatureSpaces ord = FeatureSpaces::SingleOrdinal(0, 19);
  EXPECT_EQ(ord.Label(ord.CardAt(12)), "12");
  EXPECT_EQ(ord.domain(0).NumericValue(12), 12);
  EXPECT_ANY_THROW(kGrid.Parse("4D"));
}

TEST(GameTest, RewardIsTupleMatch) {
  // Two copies of 2B: guessing either one wins.
  const EpisodeState s = MakeState(kGrid, Hand({"2B", "3C", "1C"}), Hand({"2B", "1A", "2B"}), 2);
  ASSERT_EQ(s.phase, Phase::kAwaitHint);
  const EpisodeState hinted = Step(kGrid, s, C("3C"));
  EXPECT_EQ(hinted.phase, Phase::kAwaitGuess);
  EXPECT_EQ(*Step(kGrid, hinted, C("2B")).reward, 1);
  EXPECT_EQ(*Step(kGrid, hinted, C("1A")).reward, 0);
}

TEST(GameTest, RejectsIllegalAndOutOfTurnActions) {
  const EpisodeState s = MakeState(kGrid, Hand({"2B", "3C"}), Hand({"2B", "1A"}), 0);
  EXPECT_THROW(Step(kGrid, s, C("1A")), ProtocolError);
  EXPECT_THROW(LegalActions(kGrid, s, Role::kGuesser), ProtocolError);
  const EpisodeState done = Step(kGrid, Step(kGrid, s, C("2B")), C("1A"));
  EXPECT_EQ(done.phase, Phase::kTerminal);
  EXPECT_FALSE(ActingRole(done).has_value());
  EXPECT_THROW(Step(kGrid, done, C("1A")), ProtocolError);
  EXPECT_THROW(MakeState(kGrid, Hand({"2B"}), Hand({"2B", "1A"}), 0), ConfigurationError);
  EXPECT_THROW(MakeState(kGrid, Hand({"2B"}), Hand({"1A"}), 1), ConfigurationError);
}

TEST(GameTest, DuplicateCardsCollapseToOneAction) {
  const ActionSet a = HandActions(kGrid, Hand({"3C", "1A", "3C", "1A", "2B"}));
  ASSERT_EQ(a.size(), 3);
  EXPECT_EQ(a.indices, (std::vector<int>{0, 4, 8}));
  EXPECT_EQ(std::count(a.mask.begin(), a.mask.end(), true), 3);
  EXPECT_TRUE(a.Contains(8));
  EXPECT_FALSE(a.Contains(1));
  EXPECT_FALSE(a.Contains(-1));
}

TEST(GameTest, DealsHandsOfTheConfiguredSize) {
  Rng rng = MakeRng(1);
  for (int n : {1, 3, 7}) {
    const EpisodeState s = NewGame(GameConfig::Standard(n), rng);
    EXPECT_EQ(s.hinter_hand.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(s.guesser_hand.size(), static_cast<std::size_t>(n));
    EXPECT_GE(s.target_index, 0);
    EXPECT_LT(s.target_index, n);
  }
  const EpisodeState same = NewGame(GameConfig::Standard(4, true), rng);
  EXPECT_EQ(same.hinter_hand, same.guesser_hand);
  const EpisodeState distinct =
      NewGame(GameConfig::Standard(9), rng, Deal::kWithoutReplacement);
  EXPECT_EQ(HandActions(kGrid, distinct.guesser_hand).size(), 9);
  EXPECT_THROW(NewGame(GameConfig::Standard(10), rng, Deal::kWithoutReplacement),
               ConfigurationError);
}

TEST(GameTest, DealIsUniformOverTheGrid) {
  Rng rng = MakeRng(2);
  std::map<long long, int> counts;
  const int games = 9000;
  for (int i = 0; i < games; ++i) ++counts[kGrid.Index(NewGame(GameConfig::Standard(1), rng).target())];
  // 8 degrees of freedom; 26.1 is the 0.999 quantile.
  EXPECT_LT(ChiSquare(counts, 9, games), 26.1);
}

TEST(GameConfigTest, ValidatesCombinations) {
  EXPECT_THROW(GameConfig::Standard(0), ConfigurationError);
  GameConfig c = GameConfig::Standard(3);
  c.encoding = {EncodingKind::kSinusoidal, 8};
  EXPECT_THROW(c.Validate(), ConfigurationError);
  EXPECT_THROW(GameConfig::OrdinalSinusoidal(3, 0, 19, 7), ConfigurationError);
  EXPECT_NO_THROW(GameConfig::OrdinalSinusoidal(3, 0, 19, 8));
}

TEST(GameConfigTest, JsonRoundTrip) {
  for (const GameConfig& c :
       {GameConfig::Standard(5), GameConfig::Standard(3, true),
        GameConfig::OrdinalSinusoidal(3, 0, 19, 200)}) {
    EXPECT_EQ(GameConfigFromJson(GameConfigToJson(c)), c);
  }
  const auto path = std::filesystem::temp_directory_path() / "hintguess_game_config.json";
  SaveGameConfig(GameConfig::OrdinalSinusoidal(3, 2, 9, 16), path.string());
  EXPECT_EQ(LoadGameConfig(path.string()), GameConfig::OrdinalSinusoidal(3, 2, 9, 16));
  EXPECT_THROW(GameConfigFromJson({{"hand_size", 3}, {"encoding", {{"type", "morse"}}}}),
               ConfigurationError);
}

TEST(EncodingTest, SinusoidAtZeroAndFormula) {
  const std::vector<double> z = SinusoidalEncode(0, 8);
  for (int i = 0; i < 8; i += 2) {
    EXPECT_EQ(z[i], 0.0);
    EXPECT_EQ(z[i + 1], 1.0);
  }
  const std::vector<double> e = SinusoidalEncode(7, 8);
  for (int i = 0; i < 4; ++i) {
    const double angle = 7.0 / std::pow(10000.0, 2.0 * i / 8.0);
    EXPECT_DOUBLE_EQ(e[2 * i], std::sin(angle));
    EXPECT_DOUBLE_EQ(e[2 * i + 1], std::cos(angle));
  }
  EXPECT_THROW(SinusoidalEncode(1, 3), ConfigurationError);
}

TEST(EncodingTest, TwoHotCardWithFlags) {
  const CardEncoder enc(GameConfig::Standard(3));
  ASSERT_EQ(enc.width(), 8);
  EXPECT_EQ(enc.Encode(C("2C"), true, false),
            (std::vector<double>{0, 1, 0, 0, 0, 1, 1, 0}));
  EXPECT_EQ(enc.Encode(C("1A"), false, true),
            (std::vector<double>{1, 0, 0, 1, 0, 0, 0, 1}));
  const CardEncoder sin(GameConfig::OrdinalSinusoidal(3, 0, 19, 32));
  EXPECT_EQ(sin.width(), 34);
}

TEST(EncodingTest, ObservationHoldsPermutedHandsThenQuery) {
  const GameConfig config = GameConfig::Standard(3);
  const EpisodeState s =
      MakeState(kGrid, Hand({"1A", "2B", "3C"}), Hand({"1B", "2C", "3A"}), 1);
  Rng rng = MakeRng(3);
  for (Role role : {Role::kHinter, Role::kGuesser}) {
    const EpisodeState state = role == Role::kHinter ? s : Step(kGrid, s, C("3C"));
    const Observation o = Observe(config, state, role, rng);
    ASSERT_EQ(o.cards.size(), 7u);
    EXPECT_TRUE(std::is_permutation(o.cards.begin(), o.cards.begin() + 3,
                                    state.hinter_hand.begin()));
    EXPECT_TRUE(std::is_permutation(o.cards.begin() + 3, o.cards.begin() + 6,
                                    state.guesser_hand.begin()));
    EXPECT_EQ(o.roles[6], ElementRole::kQueryCard);
    EXPECT_EQ(o.cards[6], role == Role::kHinter ? C("2C") : C("3C"));
    EXPECT_EQ(o.legal.actions, HandActions(kGrid, state.hand(role)).actions);
    const FeatureSequence f = Encode(o, CardEncoder(config));
    EXPECT_EQ(f.length(), 7);
    EXPECT_EQ(f.elements(6, 7), 1.0);  // query bit
    // The target is marked as the guesser's card, the hint as the hinter's.
    EXPECT_EQ(f.elements(6, 6), role == Role::kHinter ? 1.0 : 0.0);
  }
}

TEST(EncodingTest, PermutationsAreUniformAndIndependentPerPlayer) {
  const GameConfig config = GameConfig::Standard(3);
  const EpisodeState s =
      MakeState(kGrid, Hand({"1A", "2B", "3C"}), Hand({"1B", "2C", "3A"}), 0);
  Rng rng = MakeRng(4);
  std::map<long long, int> joint;
  const int draws = 36'000;
  for (int i = 0; i < draws; ++i) {
    const Observation o = Observe(config, s, Role::kHinter, rng);
    const auto pos = [&](int begin, const char* label) {
      return std::find(o.cards.begin() + begin, o.cards.begin() + begin + 3, C(label)) -
             (o.cards.begin() + begin);
    };
    // Permutation of each hand identified by where two of its cards land.
    const long long h = pos(0, "1A") * 3 + pos(0, "2B");
    const long long g = pos(3, "1B") * 3 + pos(3, "2C");
    ++joint[h * 9 + g];
  }
  // 36 reachable cells (6 x 6 permutations) out of 81 codes; remap densely.
  std::map<long long, int> dense;
  int next = 0;
  for (const auto& [code, n] : joint) dense[next++] = n;
  EXPECT_EQ(next, 36);
  // 35 degrees of freedom; 66.6 is the 0.999 quantile.
  EXPECT_LT(ChiSquare(dense, 36, draws), 66.6);
}

TEST(SymmetryTest, InverseUndoesRelabeling) {
  const SymmetryGroup group = SymmetryGroup::AllValuePermutations(kGrid);
  EXPECT_EQ(group.order(), 36);
  Rng rng = MakeRng(5);
  const EpisodeState s = Step(
      kGrid, MakeState(kGrid, Hand({"1A", "2B", "3C"}), Hand({"1B", "2C", "3A"}), 2), C("2B"));
  for (int i = 0; i < 50; ++i) {
    const Symmetry phi = group.Sample(rng);
    ValidateSymmetry(kGrid, phi);
    EXPECT_EQ(ApplySymmetry(kGrid, ApplySymmetry(kGrid, s, phi), Inverse(phi)), s);
    const EpisodeState t = ApplySymmetry(kGrid, s, phi);
    EXPECT_EQ(t.target_index, s.target_index);
    EXPECT_EQ(*t.hinted_card, ApplySymmetry(phi, *s.hinted_card));
  }
  EXPECT_THROW(ValidateSymmetry(kGrid, Symmetry{{{0, 0, 1}, {0, 1, 2}}}), std::invalid_argument);
}

TEST(SymmetryTest, SamplingIsUniformOverTheGroup) {
  const SymmetryGroup group = SymmetryGroup::AllValuePermutations(kGrid);
  Rng rng = MakeRng(6);
  std::map<long long, int> counts;
  const int draws = 36'000;
  for (int i = 0; i < draws; ++i) ++counts[group.Id(group.Sample(rng))];
  EXPECT_EQ(counts.size(), 36u);
  EXPECT_LT(ChiSquare(counts, 36, draws), 66.6);
  const SymmetryGroup identity = SymmetryGroup::IdentityOnly(kGrid);
  EXPECT_EQ(identity.order(), 1);
  EXPECT_EQ(identity.Sample(rng), IdentitySymmetry(kGrid));
}

TEST(ScenarioTest, LibraryIsPlayableAndHumanHintIsLegal) {
  const std::vector<Scenario> lib = ScenarioLibrary();
  ASSERT_EQ(lib.size(), 4u);
  EXPECT_EQ(lib[0].name, "exact_match");
  EXPECT_EQ(lib[2].name, "mutual_exclusivity");
  for (const Scenario& s : lib) {
    EXPECT_EQ(s.state.hinter_hand.size(), 2u);
    EXPECT_TRUE(HandActions(kGrid, s.state.hinter_hand).Contains(kGrid.Index(s.human_hint)));
  }
  // Exact match: the hinter holds a copy of the target.
  EXPECT_EQ(lib[0].human_hint, lib[0].state.target());
  // Mutual exclusivity: the hint shares no feature with the target.
  const Card t = lib[2].state.target(), h = lib[2].human_hint;
  EXPECT_NE(t[0], h[0]);
  EXPECT_NE(t[1], h[1]);
  EXPECT_FALSE(lib[2].reconstructed);
}

}  // namespace
}  // namespace hintguess
