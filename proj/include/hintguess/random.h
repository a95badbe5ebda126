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

#ifndef HINTGUESS_RANDOM_H_
#define HINTGUESS_RANDOM_H_

#include <cstdint>
#include <random>

namespace hintguess {

using Rng = std::mt19937_64;

// Independent, reproducible streams derived from one run seed. Each consumer
// (dealing, exploration, replay sampling, ...) gets its own stream so that
// adding draws in one place never perturbs another.
inline Rng MakeRng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x68677531u};
  return Rng(seq);
}

// Uniform integer in [0, n).
inline int UniformInt(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

inline double Uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace hintguess

#endif  // HINTGUESS_RANDOM_H_
