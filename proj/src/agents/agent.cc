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

#include "hintguess/agents/agent.h"

#include <cmath>

#include "hintguess/errors.h"

namespace hintguess {

std::string KindName(ArchitectureKind kind) {
  switch (kind) {
    case ArchitectureKind::kMlp:
      return "mlp";
    case ArchitectureKind::kMlpActionIn:
      return "mlp_action_in";
    case ArchitectureKind::kAttn:
      return "attn";
    case ArchitectureKind::kCa2i:
      return "ca2i";
    case ArchitectureKind::kSa2i:
      return "sa2i";
  }
  return "?";
}

ArchitectureKind ParseKind(const std::string& name) {
  for (ArchitectureKind k : kAllKinds)
    if (KindName(k) == name) return k;
  throw ConfigurationError("unknown architecture: " + name);
}

bool UsesAttention(ArchitectureKind kind) {
  return kind == ArchitectureKind::kAttn || kind == ArchitectureKind::kCa2i ||
         kind == ArchitectureKind::kSa2i;
}

bool ScoresPerAction(ArchitectureKind kind) {
  return kind == ArchitectureKind::kMlpActionIn || kind == ArchitectureKind::kSa2i;
}

Architecture Architecture::Default(ArchitectureKind kind) {
  Architecture a;
  a.kind = kind;
  if (UsesAttention(kind)) a.attention = nn::AttentionSpec{};
  return a;
}

void Architecture::Validate() const {
  if (UsesAttention(kind) != attention.has_value()) {
    throw ConfigurationError("attention spec must be present exactly for attention kinds");
  }
  for (int h : hidden)
    if (h <= 0) throw ConfigurationError("hidden widths must be positive");
}

int QVector::Argmax() const {
  int best = -1;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (!mask[i]) continue;
    if (best < 0 || values[i] > values[best]) best = i;
  }
  if (best < 0) throw StateError("no legal action");
  return best;
}

std::vector<int> QVector::LegalIndices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

Agent::Agent(Architecture architecture, GameConfig config, Role role, std::uint64_t seed)
    : architecture_(std::move(architecture)), config_(std::move(config)), role_(role),
      seed_(seed), encoder_(config_) {
  architecture_.Validate();
  if (config_.encoding.kind == EncodingKind::kSinusoidal && config_.features.num_features() != 1) {
    throw ConfigurationError("sinusoidal encoding needs a single feature");
  }
  BuildLayers();
  Rng rng = MakeRng(seed_, role_ == Role::kHinter ? 0x68696e74 : 0x67756573);
  if (UsesAttention(architecture_.kind)) attention_.Init(params_, rng);
  head_.Init(params_, rng);
}

Agent::Agent(Architecture architecture, GameConfig config, Role role, std::uint64_t seed,
             nn::ParameterSet params)
    : Agent(std::move(architecture), std::move(config), role, seed) {
  if (params.size() != params_.size()) {
    throw ConfigurationError("parameter count does not match the architecture");
  }
  auto& fresh = params_.all();
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const auto& given = params.all()[i];
    if (given.name != fresh[i].name || !given.value.SameShape(fresh[i].value)) {
      throw ConfigurationError("parameter '" + given.name + "' does not match the architecture");
    }
  }
  params_ = std::move(params);
  params_.ZeroGrad();
}

Agent::Agent(const Agent& o)
    : architecture_(o.architecture_), config_(o.config_), role_(o.role_), seed_(o.seed_),
      encoder_(o.encoder_), params_(o.params_), head_(o.head_), attention_(o.attention_) {}

Agent& Agent::operator=(const Agent& o) {
  if (this == &o) return *this;
  architecture_ = o.architecture_;
  config_ = o.config_;
  role_ = o.role_;
  seed_ = o.seed_;
  encoder_ = o.encoder_;
  params_ = o.params_;
  head_ = o.head_;
  attention_ = o.attention_;
  forward_passes_ = 0;
  return *this;
}

Agent::Agent(Agent&& o) noexcept
    : architecture_(std::move(o.architecture_)), config_(std::move(o.config_)), role_(o.role_),
      seed_(o.seed_), encoder_(std::move(o.encoder_)), params_(std::move(o.params_)),
      head_(std::move(o.head_)), attention_(std::move(o.attention_)),
      forward_passes_(o.forward_passes_.load()) {}

Agent& Agent::operator=(Agent&& o) noexcept {
  architecture_ = std::move(o.architecture_);
  config_ = std::move(o.config_);
  role_ = o.role_;
  seed_ = o.seed_;
  encoder_ = std::move(o.encoder_);
  params_ = std::move(o.params_);
  head_ = std::move(o.head_);
  attention_ = std::move(o.attention_);
  forward_passes_ = o.forward_passes_.load();
  return *this;
}

void Agent::BuildLayers() {
  const int w = encoder_.width();
  const int grid = config_.features.grid_size();
  const int len = sequence_length();
  auto dims = [&](int in, int out) {
    std::vector<int> d{in};
    d.insert(d.end(), architecture_.hidden.begin(), architecture_.hidden.end());
    d.push_back(out);
    return d;
  };
  switch (architecture_.kind) {
    case ArchitectureKind::kMlp:
      head_ = nn::Mlp("mlp", dims(len * w, grid));
      break;
    case ArchitectureKind::kMlpActionIn:
      head_ = nn::Mlp("mlp", dims(len * w + w, 1));
      break;
    case ArchitectureKind::kAttn:
      attention_ = nn::Attention("attn", *architecture_.attention, w);
      head_ = nn::Mlp("mlp", dims(attention_.model_dim(), grid));
      break;
    case ArchitectureKind::kCa2i:
      attention_ = nn::Attention("attn", *architecture_.attention, w, w, /*cross=*/true);
      head_ = nn::Mlp("mlp", dims(attention_.model_dim(), grid), /*hidden_relu=*/false);
      break;
    case ArchitectureKind::kSa2i:
      attention_ = nn::Attention("attn", *architecture_.attention, w);
      head_ = nn::Mlp("mlp", dims(attention_.model_dim(), 1));
      break;
  }
}

void Agent::CheckObservation(const FeatureSequence& obs) const {
  if (obs.actor != role_) {
    throw ConfigurationError(RoleName(role_) + " agent given a " + RoleName(obs.actor) +
                             " observation");
  }
  if (obs.width() != encoder_.width()) {
    throw ConfigurationError("observation width " + std::to_string(obs.width()) +
                             " does not match encoder width " +
                             std::to_string(encoder_.width()));
  }
  if (!UsesAttention(architecture_.kind) && obs.length() != sequence_length()) {
    throw ConfigurationError("flattened network expects " + std::to_string(sequence_length()) +
                             " elements, got " + std::to_string(obs.length()));
  }
  if (static_cast<int>(obs.legal.mask.size()) != config_.features.grid_size()) {
    throw ConfigurationError("legal mask does not match the action grid");
  }
}

nn::Matrix Agent::ActionRows(const FeatureSequence& obs) const {
  nn::Matrix rows(obs.legal.size(), encoder_.width());
  for (int i = 0; i < obs.legal.size(); ++i) {
    encoder_.Encode(obs.legal.actions[i], role_ == Role::kGuesser, false, rows.row(i));
  }
  return rows;
}

template <typename Params>
nn::Var Agent::Network(nn::Tape& tape, Params& params, const FeatureSequence& obs,
                       int action_index) const {
  forward_passes_.fetch_add(1, std::memory_order_relaxed);
  const nn::Matrix& x = obs.elements;
  switch (architecture_.kind) {
    case ArchitectureKind::kMlp: {
      nn::Matrix flat(1, static_cast<int>(x.size()), x.storage());
      return head_.Forward(tape, params, tape.Constant(std::move(flat)));
    }
    case ArchitectureKind::kMlpActionIn: {
      std::vector<double> flat = x.storage();
      const auto a = EncodeAction(encoder_, config_.features.CardAt(action_index), role_);
      flat.insert(flat.end(), a.begin(), a.end());
      const int n = static_cast<int>(flat.size());
      return head_.Forward(tape, params, tape.Constant(nn::Matrix(1, n, std::move(flat))));
    }
    case ArchitectureKind::kAttn: {
      nn::Var h = attention_.SelfAttend(tape, params, tape.Constant(x));
      return head_.Forward(tape, params, tape.MeanRows(h));
    }
    case ArchitectureKind::kCa2i: {
      nn::Var h = attention_.CrossAttend(tape, params, tape.Constant(ActionRows(obs)),
                                         tape.Constant(x));
      return head_.Forward(tape, params, tape.MeanRows(h));
    }
    case ArchitectureKind::kSa2i: {
      nn::Matrix input(x.rows() + 1, x.cols());
      std::copy(x.storage().begin(), x.storage().end(), input.storage().begin());
      encoder_.Encode(config_.features.CardAt(action_index), role_ == Role::kGuesser, false,
                      input.row(x.rows()));
      nn::Var h = attention_.SelfAttend(tape, params, tape.Constant(std::move(input)));
      return head_.Forward(tape, params, tape.MeanRows(h));
    }
  }
  throw ConfigurationError("unknown architecture");
}

QVector Agent::QValues(const FeatureSequence& obs) const {
  CheckObservation(obs);
  const int grid = config_.features.grid_size();
  QVector q;
  q.values.assign(grid, kMaskedQ);
  q.mask = obs.legal.mask;
  if (ScoresPerAction(architecture_.kind)) {
    for (int idx : obs.legal.indices) {
      nn::Tape tape(nn::Tape::Mode::kInference);
      q.values[idx] = tape.scalar(Network(tape, params_, obs, idx));
    }
  } else {
    nn::Tape tape(nn::Tape::Mode::kInference);
    const nn::Matrix& out = tape.value(Network(tape, params_, obs, -1));
    for (int idx : obs.legal.indices) q.values[idx] = out[idx];
  }
  return q;
}

QVector Agent::QValues(const Observation& obs) const { return QValues(Encode(obs, encoder_)); }

nn::Var Agent::ActionValue(nn::Tape& tape, const FeatureSequence& obs, int action_index) {
  CheckObservation(obs);
  if (!obs.legal.Contains(action_index)) {
    throw ConfigurationError("training action is not legal in its observation");
  }
  nn::Var out = Network(tape, params_, obs, action_index);
  if (ScoresPerAction(architecture_.kind)) return out;
  return tape.Element(out, 0, action_index);
}

double EpsilonSchedule::operator()(std::int64_t episode) const {
  return min + (start - min) * std::exp(-static_cast<double>(episode) / decay);
}

int SelectAction(const QVector& q, double epsilon, Rng& rng) {
  const bool explore = Uniform01(rng) < epsilon;
  if (explore) {
    const auto legal = q.LegalIndices();
    if (legal.empty()) throw StateError("no legal action");
    return legal[UniformInt(rng, static_cast<int>(legal.size()))];
  }
  return q.Argmax();
}

}  // namespace hintguess
