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

#include "hintguess/nn/grad_check.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hintguess/random.h"

namespace hintguess::nn {
namespace {

double Evaluate(ParameterSet& params, const LossBuilder& loss, std::vector<bool>* pattern) {
  Tape tape(Tape::Mode::kInference);
  tape.TrackActivationPattern(true);
  const double value = tape.scalar(loss(tape, params));
  *pattern = tape.activation_pattern();
  return value;
}

}  // namespace

GradCheckResult GradCheck(ParameterSet& params, const LossBuilder& loss,
                          const GradCheckOptions& options) {
  params.ZeroGrad();
  std::vector<bool> base_pattern;
  {
    Tape tape;
    tape.TrackActivationPattern(true);
    Var l = loss(tape, params);
    tape.Backward(l);
    base_pattern = tape.activation_pattern();
  }
  std::vector<bool> up_pattern, down_pattern;
  if (options.corrupt) options.corrupt(params);

  Rng rng = MakeRng(options.seed, 0x67636b);
  GradCheckResult result;
  for (auto& p : params.all()) {
    std::vector<int> coords(p.value.size());
    std::iota(coords.begin(), coords.end(), 0);
    if (options.max_coords_per_param > 0 &&
        static_cast<int>(coords.size()) > options.max_coords_per_param) {
      std::shuffle(coords.begin(), coords.end(), rng);
      coords.resize(options.max_coords_per_param);
    }
    for (int idx : coords) {
      const double original = p.value[idx];
      p.value[idx] = original + options.step;
      const double up = Evaluate(params, loss, &up_pattern);
      p.value[idx] = original - options.step;
      const double down = Evaluate(params, loss, &down_pattern);
      p.value[idx] = original;
      if (options.skip_kinks && (up_pattern != base_pattern || down_pattern != base_pattern)) {
        ++result.kinks_skipped;
        continue;
      }
      const double numeric = (up - down) / (2.0 * options.step);
      const double analytic = p.grad[idx];
      const double denom =
          std::max({std::abs(analytic), std::abs(numeric), options.denominator_floor});
      const double rel = std::abs(analytic - numeric) / denom;
      ++result.coords_checked;
      if (rel > result.max_relative_error || !std::isfinite(rel)) {
        result.max_relative_error = rel;
        result.worst_parameter = p.name;
        result.worst_index = idx;
      }
    }
  }
  params.ZeroGrad();
  return result;
}

}  // namespace hintguess::nn
