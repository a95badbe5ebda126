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

#ifndef HINTGUESS_TRAINING_REPLAY_BUFFER_H_
#define HINTGUESS_TRAINING_REPLAY_BUFFER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hintguess/game/encoding.h"
#include "hintguess/random.h"

namespace hintguess {

enum class Provenance { kSelfPlay, kFictitiousPi0 };

struct Transition {
  Role role = Role::kHinter;
  Observation observation;
  int action = 0;  // grid index
  int reward = 0;
  Provenance provenance = Provenance::kSelfPlay;
  std::uint64_t sequence = 0;  // assigned on push
};

// Bounded FIFO store with uniform sampling (with replacement).
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void Push(Transition transition);

  // nullopt while fewer than `batch` transitions are stored.
  std::optional<std::vector<const Transition*>> Sample(std::size_t batch, Rng& rng) const;

  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::uint64_t total_pushed() const { return next_sequence_; }

  // Oldest first.
  const Transition& at(std::size_t i) const;

 private:
  std::size_t capacity_;
  std::vector<Transition> items_;
  std::size_t head_ = 0;  // index of the oldest item once full
  std::uint64_t next_sequence_ = 0;
};

}  // namespace hintguess

#endif  // HINTGUESS_TRAINING_REPLAY_BUFFER_H_
