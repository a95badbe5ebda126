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

#ifndef HINTGUESS_NN_TAPE_H_
#define HINTGUESS_NN_TAPE_H_

#include <functional>
#include <span>
#include <vector>

#include "hintguess/nn/matrix.h"
#include "hintguess/nn/parameters.h"

namespace hintguess::nn {

// Handle to a value recorded on a Tape.
struct Var {
  int id = -1;
};

// Reverse-mode differentiation over a linear recording of matrix ops.
//
// In kRecord mode every op stores a backward closure; Backward() walks the
// tape once in reverse and accumulates into Parameter::grad for every
// parameter that was entered through the non-const Param() overload. In
// kInference mode nothing is recorded and Backward() is a state error.
class Tape {
 public:
  enum class Mode { kRecord, kInference };

  explicit Tape(Mode mode = Mode::kRecord) : mode_(mode) {}
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var Constant(Matrix value);
  Var Param(Parameter& p);        // gradient flows into p.grad
  Var Param(const Parameter& p);  // treated as a constant

  Var MatMul(Var a, Var b);
  Var MatMulTransposedB(Var a, Var b);  // a * b^T
  Var Affine(Var x, Var w, Var b);      // x * w + b, b broadcast over rows
  Var Relu(Var x);
  Var Scale(Var x, double s);
  Var SoftmaxRows(Var x);
  Var MeanRows(Var x);  // 1 x cols
  Var SliceCols(Var x, int begin, int count);
  Var ConcatCols(std::span<const Var> parts);
  Var Element(Var x, int r, int c);  // 1 x 1
  // Mean of squared differences against a constant target of equal size.
  Var MeanSquaredError(Var pred, const Matrix& target);

  const Matrix& value(Var v) const;
  // Gradient of the loss w.r.t. v; only meaningful after Backward().
  const Matrix& grad(Var v) const;
  double scalar(Var v) const { return value(v)[0]; }

  // Seeds d(loss)/d(loss) = seed at a 1x1 node. May be called once per
  // recording.
  void Backward(Var loss, double seed = 1.0);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }

  // When enabled, Relu() records which inputs were positive, in op order.
  // Finite-difference checks use this to spot steps that cross a kink.
  void TrackActivationPattern(bool on) { track_pattern_ = on; }
  const std::vector<bool>& activation_pattern() const { return pattern_; }
  bool recording() const { return mode_ == Mode::kRecord; }

 private:
  struct Node {
    Matrix value;
    const Matrix* external = nullptr;  // parameter value, not owned
    Matrix grad;
    Matrix* external_grad = nullptr;  // parameter gradient slot
    bool requires_grad = false;
    std::function<void()> backward;
  };

  Var Push(Matrix value, bool requires_grad);
  const Matrix& Value(int id) const {
    const Node& n = nodes_[id];
    return n.external ? *n.external : n.value;
  }
  Matrix& GradBuf(int id);
  bool Needs(Var v) const { return nodes_[v.id].requires_grad; }
  void Check(Var v) const;

  Mode mode_;
  std::vector<Node> nodes_;
  bool backward_done_ = false;
  bool track_pattern_ = false;
  std::vector<bool> pattern_;
};

}  // namespace hintguess::nn

#endif  // HINTGUESS_NN_TAPE_H_
