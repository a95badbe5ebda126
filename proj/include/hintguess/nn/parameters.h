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

#ifndef HINTGUESS_NN_PARAMETERS_H_
#define HINTGUESS_NN_PARAMETERS_H_

#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>

#include "hintguess/nn/matrix.h"
#include "hintguess/random.h"

namespace hintguess::nn {

struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;  // same shape as value
};

// Named parameters in insertion order. Insertion order is the canonical
// ordering used for serialization and gradient checks. Elements never move,
// so references handed to a Tape stay valid while parameters are added.
class ParameterSet {
 public:
  Parameter& Add(std::string name, int rows, int cols);
  // Weights uniform in +-1/sqrt(fan_in).
  Parameter& AddUniform(std::string name, int rows, int cols, int fan_in, Rng& rng);

  Parameter& Get(std::string_view name);
  const Parameter& Get(std::string_view name) const;
  bool Contains(std::string_view name) const;

  std::deque<Parameter>& all() { return params_; }
  const std::deque<Parameter>& all() const { return params_; }
  std::size_t size() const { return params_.size(); }
  std::size_t NumScalars() const;

  void ZeroGrad();
  bool HasNonZeroGrad() const;

  // Same names, shapes and bitwise-equal values.
  friend bool operator==(const ParameterSet& a, const ParameterSet& b);

 private:
  std::deque<Parameter> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace hintguess::nn

#endif  // HINTGUESS_NN_PARAMETERS_H_
