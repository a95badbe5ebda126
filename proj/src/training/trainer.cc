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

#include "hintguess/training/trainer.h"

#include <chrono>

#include "hintguess/errors.h"
#include "hintguess/game/encoding.h"
#include "hintguess/nn/layers.h"

namespace hintguess {
namespace {

// RNG stream ids. Each consumer owns one so that, e.g., Other-Play's
// symmetry draws never shift the dealing sequence.
enum Stream : std::uint64_t {
  kDealStream = 1,
  kExploreStream = 2,
  kObserveStream = 3,
  kReplayStream = 4,
  kSymmetryStream = 5,
  kFictitiousStream = 6,
};

struct LoopOptions {
  const SymmetryGroup* group = nullptr;  // Other-Play
  int obl_level = 0;                     // 0: not OBL
  const Agent* lower_hinter = nullptr;
};

TrainResult RunLoop(const TrainConfig& config, const GameConfig& game,
                    const Architecture& architecture, const LoopOptions& options,
                    const TrainHooks& hooks) {
  config.Validate();
  game.Validate();
  const auto start = std::chrono::steady_clock::now();
  const FeatureSpaces& spaces = game.features;

  TrainResult result{Agent(architecture, game, Role::kHinter, config.seed),
                     Agent(architecture, game, Role::kGuesser, config.seed),
                     {}, 0, false, 0.0, 0, 0};
  Agent& hinter = result.hinter;
  Agent& guesser = result.guesser;

  Rng deal_rng = MakeRng(config.seed, kDealStream);
  Rng explore_rng = MakeRng(config.seed, kExploreStream);
  Rng observe_rng = MakeRng(config.seed, kObserveStream);
  Rng replay_rng = MakeRng(config.seed, kReplayStream);
  Rng symmetry_rng = MakeRng(config.seed, kSymmetryStream);
  Rng fictitious_rng = MakeRng(config.seed, kFictitiousStream);

  ReplayBuffer hinter_buffer(config.replay_capacity);
  ReplayBuffer guesser_buffer(config.replay_capacity);

  std::int64_t pending_observations = 0;
  CurvePoint interval;
  double reward_sum = 0.0;
  double loss_h_sum = 0.0, loss_g_sum = 0.0;
  int updates_h = 0, updates_g = 0;
  std::int64_t interval_episodes = 0;

  auto flush_curve = [&](std::int64_t episode, double epsilon) {
    if (interval_episodes == 0) return;
    CurvePoint p;
    p.episode = episode;
    p.epsilon = epsilon;
    p.score = reward_sum / static_cast<double>(interval_episodes);
    p.loss_hinter = updates_h ? loss_h_sum / updates_h : 0.0;
    p.loss_guesser = updates_g ? loss_g_sum / updates_g : 0.0;
    p.updates = updates_h + updates_g;
    result.curve.push_back(p);
    if (hooks.on_curve) hooks.on_curve(p);
    reward_sum = loss_h_sum = loss_g_sum = 0.0;
    updates_h = updates_g = 0;
    interval_episodes = 0;
  };

  double epsilon = config.epsilon(0);
  std::int64_t episode = 0;
  for (; episode < config.episodes; ++episode) {
    if (hooks.stop && hooks.stop->load()) {
      result.interrupted = true;
      break;
    }
    epsilon = config.epsilon(episode);
    const EpisodeState state = NewGame(game, deal_rng);

    Observation hinter_obs = Observe(game, state, Role::kHinter, observe_rng);
    const int hint_index = SelectAction(hinter.QValues(hinter_obs), epsilon, explore_rng);
    const EpisodeState hinted = Step(spaces, state, spaces.CardAt(hint_index));

    // The guesser's view, possibly relabeled.
    std::optional<Symmetry> phi;
    if (options.group) phi = options.group->Sample(symmetry_rng);
    const EpisodeState guesser_view = phi ? ApplySymmetry(spaces, hinted, *phi) : hinted;
    Observation guesser_obs = Observe(game, guesser_view, Role::kGuesser, observe_rng);
    const int guess_index = SelectAction(guesser.QValues(guesser_obs), epsilon, explore_rng);
    Card guess = spaces.CardAt(guess_index);
    if (phi) guess = ApplySymmetry(Inverse(*phi), guess);
    const EpisodeState done = Step(spaces, hinted, guess);
    const int reward = *done.reward;
    if (hooks.on_episode) hooks.on_episode(done);

    hinter_buffer.Push(
        Transition{Role::kHinter, std::move(hinter_obs), hint_index, reward,
                   Provenance::kSelfPlay, 0});

    if (options.obl_level == 0) {
      guesser_buffer.Push(Transition{Role::kGuesser, std::move(guesser_obs), guess_index,
                                     reward, Provenance::kSelfPlay, 0});
      ++result.guesser_live;
    } else {
      // The guesser learns only from hints the lower-level hinter would
      // have given in this state.
      Card fictitious_hint;
      if (options.obl_level == 1) {
        // Same as RandomPlayer in card mode.
        fictitious_hint = state.hinter_hand[UniformInt(
            fictitious_rng, static_cast<int>(state.hinter_hand.size()))];
      } else {
        const Observation obs = Observe(game, state, Role::kHinter, fictitious_rng);
        fictitious_hint = spaces.CardAt(options.lower_hinter->QValues(obs).Argmax());
      }
      const EpisodeState f_hinted = Step(spaces, state, fictitious_hint);
      Observation f_obs = Observe(game, f_hinted, Role::kGuesser, fictitious_rng);
      const int f_guess = SelectAction(guesser.QValues(f_obs), epsilon, explore_rng);
      const int f_reward = *Step(spaces, f_hinted, spaces.CardAt(f_guess)).reward;
      guesser_buffer.Push(Transition{Role::kGuesser, std::move(f_obs), f_guess, f_reward,
                                     Provenance::kFictitiousPi0, 0});
      ++result.guesser_fictitious;
    }

    reward_sum += reward;
    ++interval_episodes;
    pending_observations += 2;
    while (pending_observations >= config.update_every) {
      pending_observations -= config.update_every;
      if (auto batch = hinter_buffer.Sample(config.batch, replay_rng)) {
        loss_h_sum += TrainStep(hinter, *batch, config.lr);
        ++updates_h;
      }
      if (auto batch = guesser_buffer.Sample(config.batch, replay_rng)) {
        loss_g_sum += TrainStep(guesser, *batch, config.lr);
        ++updates_g;
      }
    }

    if ((episode + 1) % config.curve_interval == 0) flush_curve(episode + 1, epsilon);
  }
  flush_curve(episode, epsilon);
  result.episodes_completed = episode;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

std::string VariantName(Variant variant) {
  switch (variant) {
    case Variant::kIql:
      return "iql";
    case Variant::kOtherPlay:
      return "op";
    case Variant::kObl:
      return "obl";
  }
  return "?";
}

Variant ParseVariant(const std::string& name) {
  for (Variant v : {Variant::kIql, Variant::kOtherPlay, Variant::kObl})
    if (VariantName(v) == name) return v;
  throw ConfigurationError("unknown training variant: " + name);
}

void TrainConfig::Validate() const {
  if (episodes <= 0) throw ConfigurationError("episodes must be positive");
  if (!(lr >= 0.0)) throw ConfigurationError("learning rate must be non-negative");
  if (batch <= 0) throw ConfigurationError("batch must be positive");
  if (update_every <= 0) throw ConfigurationError("update_every must be positive");
  if (replay_capacity == 0) throw ConfigurationError("replay capacity must be positive");
  if (static_cast<std::size_t>(batch) > replay_capacity) {
    throw ConfigurationError("batch larger than the replay capacity");
  }
  if (curve_interval <= 0) throw ConfigurationError("curve interval must be positive");
  if (epsilon.decay <= 0.0) throw ConfigurationError("epsilon decay must be positive");
  if (epsilon.min < 0.0 || epsilon.start > 1.0 || epsilon.min > epsilon.start) {
    throw ConfigurationError("epsilon schedule out of range");
  }
  if (variant == Variant::kObl && obl_level < 1) {
    throw ConfigurationError("OBL level must be at least 1");
  }
}

double LearningTarget(const Transition& transition) {
  return static_cast<double>(transition.reward);
}

double TrainStep(Agent& agent, const std::vector<const Transition*>& batch, double lr) {
  if (batch.empty()) throw std::invalid_argument("empty batch");
  const double inv = 1.0 / static_cast<double>(batch.size());
  double loss = 0.0;
  for (const Transition* t : batch) {
    const FeatureSequence seq = Encode(t->observation, agent.encoder());
    nn::Tape tape;
    nn::Var q = agent.ActionValue(tape, seq, t->action);
    nn::Var l = tape.MeanSquaredError(q, nn::Matrix(1, 1, LearningTarget(*t)));
    loss += tape.scalar(l);
    tape.Backward(l, inv);
  }
  nn::SgdStep(agent.params(), lr);
  return loss * inv;
}

TrainResult RunSelfPlay(const TrainConfig& config, const GameConfig& game,
                        const Architecture& architecture, const TrainHooks& hooks) {
  return RunLoop(config, game, architecture, LoopOptions{}, hooks);
}

TrainResult RunOtherPlay(const TrainConfig& config, const GameConfig& game,
                         const Architecture& architecture, const TrainHooks& hooks) {
  const SymmetryGroup group = config.identity_symmetry_only
                                  ? SymmetryGroup::IdentityOnly(game.features)
                                  : SymmetryGroup::AllValuePermutations(game.features);
  LoopOptions options;
  options.group = &group;
  return RunLoop(config, game, architecture, options, hooks);
}

TrainResult RunObl(const TrainConfig& config, const GameConfig& game,
                   const Architecture& architecture, int level, const Agent* lower_hinter,
                   const TrainHooks& hooks) {
  if (level < 1) throw ConfigurationError("OBL level must be at least 1");
  if (level > 1) {
    if (lower_hinter == nullptr) {
      throw ConfigurationError("OBL level " + std::to_string(level) +
                               " needs the level " + std::to_string(level - 1) + " hinter");
    }
    if (lower_hinter->role() != Role::kHinter || !(lower_hinter->config() == game)) {
      throw ConfigurationError("lower-level hinter does not match the game");
    }
  }
  LoopOptions options;
  options.obl_level = level;
  options.lower_hinter = level > 1 ? lower_hinter : nullptr;
  return RunLoop(config, game, architecture, options, hooks);
}

TrainResult Train(const TrainConfig& config, const GameConfig& game,
                  const Architecture& architecture, const Agent* lower_hinter,
                  const TrainHooks& hooks) {
  switch (config.variant) {
    case Variant::kIql:
      return RunSelfPlay(config, game, architecture, hooks);
    case Variant::kOtherPlay:
      return RunOtherPlay(config, game, architecture, hooks);
    case Variant::kObl:
      return RunObl(config, game, architecture, config.obl_level, lower_hinter, hooks);
  }
  throw ConfigurationError("unknown variant");
}

}  // namespace hintguess
