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

#include "hintguess/training/replay_buffer.h"

#include <stdexcept>

#include "hintguess/errors.h"

namespace hintguess {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw ConfigurationError("replay capacity must be positive");
  items_.reserve(std::min<std::size_t>(capacity, 1 << 16));
}

void ReplayBuffer::Push(Transition transition) {
  transition.sequence = next_sequence_++;
  if (items_.size() < capacity_) {
    items_.push_back(std::move(transition));
    return;
  }
  items_[head_] = std::move(transition);
  head_ = (head_ + 1) % capacity_;
}

std::optional<std::vector<const Transition*>> ReplayBuffer::Sample(std::size_t batch,
                                                                   Rng& rng) const {
  if (batch == 0 || items_.size() < batch) return std::nullopt;
  std::vector<const Transition*> out;
  out.reserve(batch);
  const int n = static_cast<int>(items_.size());
  for (std::size_t i = 0; i < batch; ++i) out.push_back(&items_[UniformInt(rng, n)]);
  return out;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= items_.size()) throw std::out_of_range("replay index");
  return items_[(head_ + i) % items_.size()];
}

}  // namespace hintguess
