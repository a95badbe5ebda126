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

#ifndef HINTGUESS_AGENTS_AGENT_H_
#define HINTGUESS_AGENTS_AGENT_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hintguess/game/encoding.h"
#include "hintguess/game/game.h"
#include "hintguess/nn/layers.h"
#include "hintguess/nn/parameters.h"
#include "hintguess/nn/tape.h"
#include "hintguess/random.h"

namespace hintguess {

enum class ArchitectureKind { kMlp, kMlpActionIn, kAttn, kCa2i, kSa2i };

inline constexpr ArchitectureKind kAllKinds[] = {
    ArchitectureKind::kMlp, ArchitectureKind::kMlpActionIn, ArchitectureKind::kAttn,
    ArchitectureKind::kCa2i, ArchitectureKind::kSa2i};

std::string KindName(ArchitectureKind kind);
ArchitectureKind ParseKind(const std::string& name);

bool UsesAttention(ArchitectureKind kind);
// One network pass per legal action, each yielding a scalar.
bool ScoresPerAction(ArchitectureKind kind);

struct Architecture {
  ArchitectureKind kind = ArchitectureKind::kMlp;
  std::optional<nn::AttentionSpec> attention;  // iff UsesAttention(kind)
  std::vector<int> hidden = {128, 128, 128};

  static Architecture Default(ArchitectureKind kind);
  void Validate() const;
};

inline constexpr double kMaskedQ = -1e9;

// Values over the full action grid; masked entries hold kMaskedQ.
struct QVector {
  std::vector<double> values;
  std::vector<bool> mask;

  // Highest legal value, lowest grid index on ties.
  int Argmax() const;
  std::vector<int> LegalIndices() const;
};

// A Q-network for one role. Parameters are owned by value; copies are
// independent.
class Agent {
 public:
  Agent(Architecture architecture, GameConfig config, Role role, std::uint64_t seed);
  // Wraps existing parameters (checkpoint load). Shapes are validated
  // against a freshly built network.
  Agent(Architecture architecture, GameConfig config, Role role, std::uint64_t seed,
        nn::ParameterSet params);

  Agent(const Agent& other);
  Agent& operator=(const Agent& other);
  Agent(Agent&&) noexcept;
  Agent& operator=(Agent&&) noexcept;

  QVector QValues(const FeatureSequence& observation) const;
  QVector QValues(const Observation& observation) const;

  // Records Q(observation)[action] on `tape` with gradients flowing into
  // params(). `action_index` is a grid index of a legal action.
  nn::Var ActionValue(nn::Tape& tape, const FeatureSequence& observation, int action_index);

  const Architecture& architecture() const { return architecture_; }
  ArchitectureKind kind() const { return architecture_.kind; }
  const GameConfig& config() const { return config_; }
  Role role() const { return role_; }
  std::uint64_t seed() const { return seed_; }
  const CardEncoder& encoder() const { return encoder_; }
  nn::ParameterSet& params() { return params_; }
  const nn::ParameterSet& params() const { return params_; }

  // Network passes since construction or the last reset; per-action kinds
  // count one pass per scored action.
  std::int64_t forward_passes() const { return forward_passes_.load(); }
  void ResetForwardPasses() { forward_passes_ = 0; }

  // Sequence length a flattened (MLP) network expects.
  int sequence_length() const { return 2 * config_.hand_size + 1; }

 private:
  void BuildLayers();
  void CheckObservation(const FeatureSequence& observation) const;
  nn::Matrix ActionRows(const FeatureSequence& observation) const;

  // Vector kinds: 1 x grid. Per-action kinds: 1 x 1 for `action_index`.
  template <typename Params>
  nn::Var Network(nn::Tape& tape, Params& params, const FeatureSequence& observation,
                  int action_index) const;

  Architecture architecture_;
  GameConfig config_;
  Role role_;
  std::uint64_t seed_;
  CardEncoder encoder_;
  nn::ParameterSet params_;
  nn::Mlp head_;
  nn::Attention attention_;
  mutable std::atomic<std::int64_t> forward_passes_{0};
};

// epsilon = min + (start - min) * exp(-episode / decay)
struct EpsilonSchedule {
  double min = 0.01;
  double start = 0.95;
  double decay = 50000.0;

  double operator()(std::int64_t episode) const;
};

// With probability epsilon a uniform legal action, otherwise the argmax.
// Returns a grid index.
int SelectAction(const QVector& q, double epsilon, Rng& rng);

}  // namespace hintguess

#endif  // HINTGUESS_AGENTS_AGENT_H_
