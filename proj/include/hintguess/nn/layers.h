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

#ifndef HINTGUESS_NN_LAYERS_H_
#define HINTGUESS_NN_LAYERS_H_

#include <string>
#include <vector>

#include "hintguess/nn/matrix.h"
#include "hintguess/nn/parameters.h"
#include "hintguess/nn/tape.h"
#include "hintguess/random.h"

namespace hintguess::nn {

// Stack of affine layers. Hidden layers use ReLU when `hidden_relu` is set;
// the final layer is always linear.
class Mlp {
 public:
  Mlp() = default;
  Mlp(std::string prefix, std::vector<int> dims, bool hidden_relu = true);

  // Registers `<prefix>.<i>.weight` (in x out) and `<prefix>.<i>.bias`
  // (1 x out) with uniform fan-in weights and zero biases.
  void Init(ParameterSet& params, Rng& rng) const;

  // x: rows x dims.front(); returns rows x dims.back().
  template <typename Params>
  Var Forward(Tape& tape, Params& params, Var x) const;

  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  int num_layers() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<int>& dims() const { return dims_; }

 private:
  std::string prefix_;
  std::vector<int> dims_;
  bool hidden_relu_ = true;
};

enum class ScaleMode {
  kByKeyDim,      // logits / sqrt(head dim)
  kByInputCount,  // logits / sqrt(number of attended elements)
};

struct AttentionSpec {
  int heads = 1;
  int layers = 1;
  int model_dim = 0;  // 0: use the input width
  ScaleMode scale_mode = ScaleMode::kByKeyDim;
};

// Dot-product attention layers. Each layer has query/key/value projections
// (in x model_dim) and an output projection (model_dim x model_dim) applied
// to the concatenated heads. No biases, no residuals, no normalization.
class Attention {
 public:
  Attention() = default;
  // Self-attention over inputs of width `input_dim`.
  Attention(std::string prefix, AttentionSpec spec, int input_dim);
  // Cross-attention when `cross` is set: queries of width `query_dim` attend
  // to a context of width `context_dim` at every layer.
  Attention(std::string prefix, AttentionSpec spec, int query_dim, int context_dim,
            bool cross);

  void Init(ParameterSet& params, Rng& rng) const;

  // x: m x input width -> m x model_dim.
  template <typename Params>
  Var SelfAttend(Tape& tape, Params& params, Var x) const;

  // queries: n x query width, context: m x context width -> n x model_dim.
  // Keys and values come from the context only; deeper layers attend the
  // updated queries to the same context.
  template <typename Params>
  Var CrossAttend(Tape& tape, Params& params, Var queries, Var context) const;

  const AttentionSpec& spec() const { return spec_; }
  int model_dim() const { return spec_.model_dim; }

 private:
  template <typename Params>
  Var Layer(Tape& tape, Params& params, int layer, Var queries, Var context) const;

  std::string prefix_;
  AttentionSpec spec_;
  int query_dim_ = 0;
  int context_dim_ = 0;
  bool cross_ = false;
};

// Loss value and d(loss)/d(pred) for the mean squared error.
struct MseResult {
  double loss = 0.0;
  std::vector<double> grad;
};
MseResult MseLoss(std::span<const double> pred, std::span<const double> target);

// p <- p - lr * grad for every parameter, then clears gradients. lr == 0
// leaves values untouched bit for bit.
void SgdStep(ParameterSet& params, double lr);

// Convenience wrappers evaluating a single forward pass without recording.
std::vector<double> MlpForward(const ParameterSet& params, const Mlp& mlp,
                               std::span<const double> input);
std::vector<std::vector<double>> SelfAttention(
    const ParameterSet& params, const Attention& attention,
    const std::vector<std::vector<double>>& inputs);
std::vector<std::vector<double>> CrossAttention(
    const ParameterSet& params, const Attention& attention,
    const std::vector<std::vector<double>>& queries,
    const std::vector<std::vector<double>>& context);

Matrix StackRows(const std::vector<std::vector<double>>& rows);
std::vector<std::vector<double>> UnstackRows(const Matrix& m);

}  // namespace hintguess::nn

#endif  // HINTGUESS_NN_LAYERS_H_
