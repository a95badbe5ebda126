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

#ifndef HINTGUESS_NN_GRAD_CHECK_H_
#define HINTGUESS_NN_GRAD_CHECK_H_

#include <cstdint>
#include <functional>
#include <string>

#include "hintguess/nn/parameters.h"
#include "hintguess/nn/tape.h"

namespace hintguess::nn {

struct GradCheckOptions {
  double step = 1e-5;
  // Coordinates checked per parameter tensor; 0 checks every coordinate.
  int max_coords_per_param = 0;
  std::uint64_t seed = 0;
  // |analytic - numeric| / max(|analytic|, |numeric|, denominator_floor)
  double denominator_floor = 1e-6;
  // Skip coordinates whose +-step changes any ReLU's active set; the
  // central difference straddles a kink there and is not a derivative.
  bool skip_kinks = true;
  // Test hook applied to the analytic gradients before comparison.
  std::function<void(ParameterSet&)> corrupt;
};

struct GradCheckResult {
  double max_relative_error = 0.0;
  std::string worst_parameter;
  int worst_index = -1;
  int coords_checked = 0;
  int kinks_skipped = 0;
};

// Builds the scalar loss on the given tape from `params`. Must be
// deterministic.
using LossBuilder = std::function<Var(Tape&, ParameterSet&)>;

// Compares reverse-mode gradients against central finite differences.
GradCheckResult GradCheck(ParameterSet& params, const LossBuilder& loss,
                          const GradCheckOptions& options = {});

}  // namespace hintguess::nn

#endif  // HINTGUESS_NN_GRAD_CHECK_H_
