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

#include "hintguess/training/grad_audit.h"

#include "hintguess/game/encoding.h"

namespace hintguess {

GradAuditResult AuditGradients(const Architecture& architecture, const GameConfig& game,
                               const GradAuditOptions& options) {
  GradAuditResult result;
  Rng rng = MakeRng(options.seed, 0x67726164);
  for (int i = 0; i < options.instances; ++i) {
    const Role role = i % 2 == 0 ? Role::kHinter : Role::kGuesser;
    Agent agent(architecture, game, role, options.seed + i);
    EpisodeState state = NewGame(game, rng);
    if (role == Role::kGuesser) {
      const ActionSet hints = LegalActions(game.features, state, Role::kHinter);
      state = Step(game.features, state, hints.actions[UniformInt(rng, hints.size())]);
    }
    const FeatureSequence obs = EncodeObservation(game, state, role, rng);
    const int action = obs.legal.indices[UniformInt(rng, obs.legal.size())];
    const nn::Matrix target(1, 1, static_cast<double>(UniformInt(rng, 2)));

    nn::GradCheckOptions gc;
    gc.step = options.step;
    gc.max_coords_per_param = options.max_coords_per_param;
    gc.seed = options.seed * 7919 + i;
    const nn::GradCheckResult r = nn::GradCheck(
        agent.params(),
        [&](nn::Tape& tape, nn::ParameterSet&) {
          return tape.MeanSquaredError(agent.ActionValue(tape, obs, action), target);
        },
        gc);
    result.coords_checked += r.coords_checked;
    result.kinks_skipped += r.kinks_skipped;
    ++result.instances;
    if (r.max_relative_error >= result.max_relative_error) {
      result.max_relative_error = r.max_relative_error;
      result.worst = r;
    }
  }
  return result;
}

}  // namespace hintguess
