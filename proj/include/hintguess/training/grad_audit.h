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

#ifndef HINTGUESS_TRAINING_GRAD_AUDIT_H_
#define HINTGUESS_TRAINING_GRAD_AUDIT_H_

#include <cstdint>

#include "hintguess/agents/agent.h"
#include "hintguess/nn/grad_check.h"

namespace hintguess {

struct GradAuditOptions {
  int instances = 20;
  std::uint64_t seed = 0;
  double step = 1e-5;
  int max_coords_per_param = 64;  // 0 checks every coordinate
};

struct GradAuditResult {
  double max_relative_error = 0.0;
  nn::GradCheckResult worst;
  int instances = 0;
  int coords_checked = 0;
  int kinks_skipped = 0;
};

// Checks the training loss (Q(obs)[action] - target)^2 of freshly
// initialized hinter and guesser networks on random observations, legal
// actions and 0/1 targets.
GradAuditResult AuditGradients(const Architecture& architecture, const GameConfig& game,
                               const GradAuditOptions& options = {});

}  // namespace hintguess

#endif  // HINTGUESS_TRAINING_GRAD_AUDIT_H_
