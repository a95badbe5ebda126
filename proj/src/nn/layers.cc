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

#include "hintguess/nn/layers.h"

#include <cmath>
#include <stdexcept>

#include "hintguess/errors.h"

namespace hintguess::nn {
namespace {

std::string Name(const std::string& prefix, int index, const char* leaf) {
  return prefix + "." + std::to_string(index) + "." + leaf;
}

}  // namespace

Mlp::Mlp(std::string prefix, std::vector<int> dims, bool hidden_relu)
    : prefix_(std::move(prefix)), dims_(std::move(dims)), hidden_relu_(hidden_relu) {
  if (dims_.size() < 2) throw ConfigurationError("Mlp needs at least in/out dims");
  for (int d : dims_)
    if (d <= 0) throw ConfigurationError("Mlp dims must be positive");
}

void Mlp::Init(ParameterSet& params, Rng& rng) const {
  for (int i = 0; i < num_layers(); ++i) {
    params.AddUniform(Name(prefix_, i, "weight"), dims_[i], dims_[i + 1], dims_[i], rng);
    params.Add(Name(prefix_, i, "bias"), 1, dims_[i + 1]);
  }
}

template <typename Params>
Var Mlp::Forward(Tape& tape, Params& params, Var x) const {
  if (tape.value(x).cols() != input_dim()) {
    throw ConfigurationError("Mlp input width " + std::to_string(tape.value(x).cols()) +
                             " != " + std::to_string(input_dim()));
  }
  Var h = x;
  for (int i = 0; i < num_layers(); ++i) {
    Var w = tape.Param(params.Get(Name(prefix_, i, "weight")));
    Var b = tape.Param(params.Get(Name(prefix_, i, "bias")));
    h = tape.Affine(h, w, b);
    if (hidden_relu_ && i + 1 < num_layers()) h = tape.Relu(h);
  }
  return h;
}

template Var Mlp::Forward<ParameterSet>(Tape&, ParameterSet&, Var) const;
template Var Mlp::Forward<const ParameterSet>(Tape&, const ParameterSet&, Var) const;

Attention::Attention(std::string prefix, AttentionSpec spec, int input_dim)
    : Attention(std::move(prefix), spec, input_dim, input_dim, false) {}

Attention::Attention(std::string prefix, AttentionSpec spec, int query_dim, int context_dim,
                     bool cross)
    : prefix_(std::move(prefix)), spec_(spec), query_dim_(query_dim),
      context_dim_(context_dim), cross_(cross) {
  if (spec_.model_dim == 0) spec_.model_dim = query_dim;
  if (spec_.heads < 1 || spec_.layers < 1 || spec_.model_dim < 1) {
    throw ConfigurationError("attention needs heads, layers and model_dim >= 1");
  }
  if (spec_.model_dim % spec_.heads != 0) {
    throw ConfigurationError("model_dim must be divisible by heads");
  }
}

void Attention::Init(ParameterSet& params, Rng& rng) const {
  const int dm = spec_.model_dim;
  for (int l = 0; l < spec_.layers; ++l) {
    const int qin = l == 0 ? query_dim_ : dm;
    const int cin = cross_ ? context_dim_ : qin;
    params.AddUniform(Name(prefix_, l, "query"), qin, dm, qin, rng);
    params.AddUniform(Name(prefix_, l, "key"), cin, dm, cin, rng);
    params.AddUniform(Name(prefix_, l, "value"), cin, dm, cin, rng);
    params.AddUniform(Name(prefix_, l, "output"), dm, dm, dm, rng);
  }
}

template <typename Params>
Var Attention::Layer(Tape& tape, Params& params, int layer, Var queries,
                     Var context) const {
  const int dm = spec_.model_dim;
  const int head_dim = dm / spec_.heads;
  Var q = tape.MatMul(queries, tape.Param(params.Get(Name(prefix_, layer, "query"))));
  Var k = tape.MatMul(context, tape.Param(params.Get(Name(prefix_, layer, "key"))));
  Var v = tape.MatMul(context, tape.Param(params.Get(Name(prefix_, layer, "value"))));
  const int attended = tape.value(context).rows();
  const double scale = spec_.scale_mode == ScaleMode::kByKeyDim
                           ? 1.0 / std::sqrt(static_cast<double>(head_dim))
                           : 1.0 / std::sqrt(static_cast<double>(attended));
  std::vector<Var> heads;
  heads.reserve(spec_.heads);
  for (int h = 0; h < spec_.heads; ++h) {
    Var qh = tape.SliceCols(q, h * head_dim, head_dim);
    Var kh = tape.SliceCols(k, h * head_dim, head_dim);
    Var vh = tape.SliceCols(v, h * head_dim, head_dim);
    Var weights = tape.SoftmaxRows(tape.Scale(tape.MatMulTransposedB(qh, kh), scale));
    heads.push_back(tape.MatMul(weights, vh));
  }
  Var mixed = tape.ConcatCols(heads);
  return tape.MatMul(mixed, tape.Param(params.Get(Name(prefix_, layer, "output"))));
}

template <typename Params>
Var Attention::SelfAttend(Tape& tape, Params& params, Var x) const {
  if (tape.value(x).rows() == 0) throw std::invalid_argument("self-attention of no inputs");
  if (cross_) throw ConfigurationError("attention was built for cross-attention");
  if (tape.value(x).cols() != query_dim_) {
    throw ConfigurationError("self-attention input width mismatch");
  }
  Var h = x;
  for (int l = 0; l < spec_.layers; ++l) h = Layer(tape, params, l, h, h);
  return h;
}

template <typename Params>
Var Attention::CrossAttend(Tape& tape, Params& params, Var queries, Var context) const {
  if (tape.value(queries).rows() == 0 || tape.value(context).rows() == 0) {
    throw std::invalid_argument("cross-attention needs queries and context");
  }
  if (tape.value(queries).cols() != query_dim_ || tape.value(context).cols() != context_dim_) {
    throw ConfigurationError("cross-attention input width mismatch");
  }
  if (!cross_) throw ConfigurationError("attention was built for self-attention");
  Var h = queries;
  for (int l = 0; l < spec_.layers; ++l) h = Layer(tape, params, l, h, context);
  return h;
}

template Var Attention::SelfAttend<ParameterSet>(Tape&, ParameterSet&, Var) const;
template Var Attention::SelfAttend<const ParameterSet>(Tape&, const ParameterSet&,
                                                       Var) const;
template Var Attention::CrossAttend<ParameterSet>(Tape&, ParameterSet&, Var, Var) const;
template Var Attention::CrossAttend<const ParameterSet>(Tape&, const ParameterSet&, Var,
                                                        Var) const;

MseResult MseLoss(std::span<const double> pred, std::span<const double> target) {
  if (pred.size() != target.size() || pred.empty()) {
    throw std::invalid_argument("MseLoss: length mismatch");
  }
  MseResult r;
  r.grad.resize(pred.size());
  const double n = static_cast<double>(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - target[i];
    r.loss += d * d;
    r.grad[i] = 2.0 * d / n;
  }
  r.loss /= n;
  return r;
}

void SgdStep(ParameterSet& params, double lr) {
  if (lr < 0.0 || !std::isfinite(lr)) throw std::invalid_argument("learning rate must be >= 0");
  for (auto& p : params.all()) {
    if (lr != 0.0) {
      auto v = p.value.data();
      auto g = p.grad.data();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= lr * g[i];
    }
    p.grad.Fill(0.0);
  }
}

Matrix StackRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Matrix();
  const int w = static_cast<int>(rows.front().size());
  Matrix m(static_cast<int>(rows.size()), w);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != w) {
      throw ConfigurationError("input vectors have different widths");
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<std::vector<double>> UnstackRows(const Matrix& m) {
  std::vector<std::vector<double>> out;
  out.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

std::vector<double> MlpForward(const ParameterSet& params, const Mlp& mlp,
                               std::span<const double> input) {
  Tape tape(Tape::Mode::kInference);
  Var out = mlp.Forward(tape, params, tape.Constant(Matrix::RowVector(input)));
  auto d = tape.value(out).data();
  return {d.begin(), d.end()};
}

std::vector<std::vector<double>> SelfAttention(
    const ParameterSet& params, const Attention& attention,
    const std::vector<std::vector<double>>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("self-attention of no inputs");
  Tape tape(Tape::Mode::kInference);
  Var out = attention.SelfAttend(tape, params, tape.Constant(StackRows(inputs)));
  return UnstackRows(tape.value(out));
}

std::vector<std::vector<double>> CrossAttention(
    const ParameterSet& params, const Attention& attention,
    const std::vector<std::vector<double>>& queries,
    const std::vector<std::vector<double>>& context) {
  if (queries.empty() || context.empty()) {
    throw std::invalid_argument("cross-attention needs queries and context");
  }
  Tape tape(Tape::Mode::kInference);
  Var out = attention.CrossAttend(tape, params, tape.Constant(StackRows(queries)),
                                  tape.Constant(StackRows(context)));
  return UnstackRows(tape.value(out));
}

}  // namespace hintguess::nn
