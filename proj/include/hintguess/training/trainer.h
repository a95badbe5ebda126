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

#ifndef HINTGUESS_TRAINING_TRAINER_H_
#define HINTGUESS_TRAINING_TRAINER_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hintguess/agents/agent.h"
#include "hintguess/game/game.h"
#include "hintguess/game/symmetry.h"
#include "hintguess/training/replay_buffer.h"

namespace hintguess {

enum class Variant { kIql, kOtherPlay, kObl };
std::string VariantName(Variant variant);
Variant ParseVariant(const std::string& name);

struct TrainConfig {
  std::int64_t episodes = 4'000'000;
  double lr = 1e-4;
  int batch = 500;
  int update_every = 500;  // observations, two per episode
  std::size_t replay_capacity = 300'000;
  EpsilonSchedule epsilon;
  std::uint64_t seed = 0;
  Variant variant = Variant::kIql;
  int obl_level = 1;
  // Other-Play only: restrict the group to the identity.
  bool identity_symmetry_only = false;
  // Episodes per training-curve point.
  std::int64_t curve_interval = 10'000;

  // Throws ConfigurationError.
  void Validate() const;
};

struct CurvePoint {
  std::int64_t episode = 0;  // episodes completed
  double epsilon = 0.0;
  double score = 0.0;  // mean training reward over the interval
  double loss_hinter = 0.0;
  double loss_guesser = 0.0;
  int updates = 0;
};

struct TrainResult {
  Agent hinter;
  Agent guesser;
  std::vector<CurvePoint> curve;
  std::int64_t episodes_completed = 0;
  bool interrupted = false;
  double wall_seconds = 0.0;
  // Per role, counts of stored transitions by provenance.
  std::int64_t guesser_fictitious = 0;
  std::int64_t guesser_live = 0;
};

struct TrainHooks {
  std::function<void(const CurvePoint&)> on_curve;
  // Polled once per episode; training stops cleanly when set.
  const std::atomic<bool>* stop = nullptr;
  // Every episode's (state before the hint, hint, guess, reward) when set.
  std::function<void(const EpisodeState&)> on_episode;
};

// Target for one transition. Each decision is followed directly by the end
// of the episode, so the target is the reward.
double LearningTarget(const Transition& transition);

// One SGD step on the batch: mean squared error between Q(obs)[action] and
// the learning target. Returns the batch loss.
double TrainStep(Agent& agent, const std::vector<const Transition*>& batch, double lr);

TrainResult RunSelfPlay(const TrainConfig& config, const GameConfig& game,
                        const Architecture& architecture, const TrainHooks& hooks = {});

// The guesser acts on a freshly sampled relabeling of every episode.
TrainResult RunOtherPlay(const TrainConfig& config, const GameConfig& game,
                         const Architecture& architecture, const TrainHooks& hooks = {});

// `lower_hinter` is the frozen level-1 below; required iff level > 1.
TrainResult RunObl(const TrainConfig& config, const GameConfig& game,
                   const Architecture& architecture, int level, const Agent* lower_hinter,
                   const TrainHooks& hooks = {});

// Dispatches on config.variant.
TrainResult Train(const TrainConfig& config, const GameConfig& game,
                  const Architecture& architecture, const Agent* lower_hinter = nullptr,
                  const TrainHooks& hooks = {});

}  // namespace hintguess

#endif  // HINTGUESS_TRAINING_TRAINER_H_
