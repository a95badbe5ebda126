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

#include "hintguess/nn/parameters.h"

#include <cmath>

#include "hintguess/errors.h"

namespace hintguess::nn {

Parameter& ParameterSet::Add(std::string name, int rows, int cols) {
  if (Contains(name)) throw ConfigurationError("duplicate parameter: " + name);
  index_.emplace(name, params_.size());
  params_.push_back(Parameter{std::move(name), Matrix(rows, cols), Matrix(rows, cols)});
  return params_.back();
}

Parameter& ParameterSet::AddUniform(std::string name, int rows, int cols, int fan_in,
                                    Rng& rng) {
  Parameter& p = Add(std::move(name), rows, cols);
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& v : p.value.data()) v = dist(rng);
  return p;
}

Parameter& ParameterSet::Get(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return params_[it->second];
  throw ConfigurationError("unknown parameter: " + std::string(name));
}

const Parameter& ParameterSet::Get(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return params_[it->second];
  throw ConfigurationError("unknown parameter: " + std::string(name));
}

bool ParameterSet::Contains(std::string_view name) const {
  return index_.count(std::string(name)) > 0;
}

std::size_t ParameterSet::NumScalars() const {
  std::size_t n = 0;
  for (const auto& p : params_) n += p.value.size();
  return n;
}

void ParameterSet::ZeroGrad() {
  for (auto& p : params_) p.grad.Fill(0.0);
}

bool ParameterSet::HasNonZeroGrad() const {
  for (const auto& p : params_)
    for (double g : p.grad.data())
      if (g != 0.0) return true;
  return false;
}

bool operator==(const ParameterSet& a, const ParameterSet& b) {
  if (a.params_.size() != b.params_.size()) return false;
  for (std::size_t i = 0; i < a.params_.size(); ++i) {
    if (a.params_[i].name != b.params_[i].name) return false;
    if (!(a.params_[i].value == b.params_[i].value)) return false;
  }
  return true;
}

}  // namespace hintguess::nn
