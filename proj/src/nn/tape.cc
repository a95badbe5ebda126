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

#include "hintguess/nn/tape.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hintguess/errors.h"

namespace hintguess::nn {

void Tape::Check(Var v) const {
  if (v.id < 0 || v.id >= static_cast<int>(nodes_.size())) {
    throw StateError("invalid tape variable");
  }
}

Var Tape::Push(Matrix value, bool requires_grad) {
  if (backward_done_) throw StateError("tape already differentiated");
  Node n;
  n.value = std::move(value);
  n.requires_grad = requires_grad && recording();
  nodes_.push_back(std::move(n));
  return Var{static_cast<int>(nodes_.size()) - 1};
}

Matrix& Tape::GradBuf(int id) {
  Node& n = nodes_[id];
  if (n.external_grad) return *n.external_grad;
  if (n.grad.empty() && !Value(id).empty()) {
    n.grad = Matrix(Value(id).rows(), Value(id).cols());
  }
  return n.grad;
}

const Matrix& Tape::value(Var v) const {
  Check(v);
  return Value(v.id);
}

const Matrix& Tape::grad(Var v) const {
  Check(v);
  if (!backward_done_) throw StateError("grad requested before Backward()");
  const Node& n = nodes_[v.id];
  return n.external_grad ? *n.external_grad : n.grad;
}

Var Tape::Constant(Matrix value) { return Push(std::move(value), false); }

Var Tape::Param(Parameter& p) {
  Var v = Push(Matrix(), true);
  nodes_[v.id].external = &p.value;
  if (recording()) nodes_[v.id].external_grad = &p.grad;
  return v;
}

Var Tape::Param(const Parameter& p) {
  Var v = Push(Matrix(), false);
  nodes_[v.id].external = &p.value;
  return v;
}

Var Tape::MatMul(Var a, Var b) {
  Check(a);
  Check(b);
  Matrix out;
  MatMulInto(Value(a.id), Value(b.id), out);
  Var v = Push(std::move(out), Needs(a) || Needs(b));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, a, b, v] {
      const Matrix& g = GradBuf(v.id);
      if (Needs(a)) MatMulTransposedBInto(g, Value(b.id), GradBuf(a.id), true);
      if (Needs(b)) MatMulTransposedAInto(Value(a.id), g, GradBuf(b.id), true);
    };
  }
  return v;
}

Var Tape::MatMulTransposedB(Var a, Var b) {
  Check(a);
  Check(b);
  Matrix out;
  MatMulTransposedBInto(Value(a.id), Value(b.id), out);
  Var v = Push(std::move(out), Needs(a) || Needs(b));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, a, b, v] {
      const Matrix& g = GradBuf(v.id);
      if (Needs(a)) MatMulInto(g, Value(b.id), GradBuf(a.id), true);
      if (Needs(b)) MatMulTransposedAInto(g, Value(a.id), GradBuf(b.id), true);
    };
  }
  return v;
}

Var Tape::Affine(Var x, Var w, Var b) {
  Check(x);
  Check(w);
  Check(b);
  const Matrix& bias = Value(b.id);
  if (bias.rows() != 1 || bias.cols() != Value(w.id).cols()) {
    throw ConfigurationError("Affine: bias must be 1 x out");
  }
  Matrix out;
  MatMulInto(Value(x.id), Value(w.id), out);
  for (int i = 0; i < out.rows(); ++i) {
    auto r = out.row(i);
    for (int j = 0; j < out.cols(); ++j) r[j] += bias[j];
  }
  Var v = Push(std::move(out), Needs(x) || Needs(w) || Needs(b));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, w, b, v] {
      const Matrix& g = GradBuf(v.id);
      if (Needs(x)) MatMulTransposedBInto(g, Value(w.id), GradBuf(x.id), true);
      if (Needs(w)) MatMulTransposedAInto(Value(x.id), g, GradBuf(w.id), true);
      if (Needs(b)) {
        Matrix& gb = GradBuf(b.id);
        for (int i = 0; i < g.rows(); ++i) {
          auto gr = g.row(i);
          for (int j = 0; j < g.cols(); ++j) gb[j] += gr[j];
        }
      }
    };
  }
  return v;
}

Var Tape::Relu(Var x) {
  Check(x);
  Matrix out = Value(x.id);
  if (track_pattern_) {
    for (double e : out.data()) pattern_.push_back(e > 0.0);
  }
  for (double& e : out.data()) e = e > 0.0 ? e : 0.0;
  Var v = Push(std::move(out), Needs(x));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, v] {
      const Matrix& g = GradBuf(v.id);
      const Matrix& in = Value(x.id);
      Matrix& gx = GradBuf(x.id);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (in[i] > 0.0) gx[i] += g[i];
    };
  }
  return v;
}

Var Tape::Scale(Var x, double s) {
  Check(x);
  Matrix out = Value(x.id);
  for (double& e : out.data()) e *= s;
  Var v = Push(std::move(out), Needs(x));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, v, s] {
      const Matrix& g = GradBuf(v.id);
      Matrix& gx = GradBuf(x.id);
      for (std::size_t i = 0; i < g.size(); ++i) gx[i] += s * g[i];
    };
  }
  return v;
}

Var Tape::SoftmaxRows(Var x) {
  Check(x);
  Var v = Push(nn::SoftmaxRows(Value(x.id)), Needs(x));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, v] {
      const Matrix& g = GradBuf(v.id);
      const Matrix& y = Value(v.id);
      Matrix& gx = GradBuf(x.id);
      for (int i = 0; i < y.rows(); ++i) {
        auto yr = y.row(i);
        auto gr = g.row(i);
        auto out = gx.row(i);
        double dot = 0.0;
        for (int j = 0; j < y.cols(); ++j) dot += gr[j] * yr[j];
        for (int j = 0; j < y.cols(); ++j) out[j] += yr[j] * (gr[j] - dot);
      }
    };
  }
  return v;
}

Var Tape::MeanRows(Var x) {
  Check(x);
  const Matrix& in = Value(x.id);
  if (in.rows() == 0) throw std::invalid_argument("MeanRows of empty matrix");
  Matrix out(1, in.cols());
  for (int i = 0; i < in.rows(); ++i) {
    auto r = in.row(i);
    for (int j = 0; j < in.cols(); ++j) out[j] += r[j];
  }
  const double inv = 1.0 / in.rows();
  for (double& e : out.data()) e *= inv;
  Var v = Push(std::move(out), Needs(x));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, v] {
      const Matrix& g = GradBuf(v.id);
      Matrix& gx = GradBuf(x.id);
      const double scale = 1.0 / gx.rows();
      for (int i = 0; i < gx.rows(); ++i) {
        auto r = gx.row(i);
        for (int j = 0; j < gx.cols(); ++j) r[j] += g[j] * scale;
      }
    };
  }
  return v;
}

Var Tape::SliceCols(Var x, int begin, int count) {
  Check(x);
  const Matrix& in = Value(x.id);
  if (begin < 0 || count < 0 || begin + count > in.cols()) {
    throw ConfigurationError("SliceCols out of range");
  }
  if (begin == 0 && count == in.cols() && !recording()) {
    return x;
  }
  Matrix out(in.rows(), count);
  for (int i = 0; i < in.rows(); ++i)
    std::copy_n(in.row(i).begin() + begin, count, out.row(i).begin());
  Var v = Push(std::move(out), Needs(x));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, v, begin, count] {
      const Matrix& g = GradBuf(v.id);
      Matrix& gx = GradBuf(x.id);
      for (int i = 0; i < g.rows(); ++i) {
        auto gr = g.row(i);
        auto out = gx.row(i);
        for (int j = 0; j < count; ++j) out[begin + j] += gr[j];
      }
    };
  }
  return v;
}

Var Tape::ConcatCols(std::span<const Var> parts) {
  if (parts.empty()) throw std::invalid_argument("ConcatCols of nothing");
  const int rows = value(parts[0]).rows();
  int cols = 0;
  bool needs = false;
  for (Var p : parts) {
    Check(p);
    if (Value(p.id).rows() != rows) throw ConfigurationError("ConcatCols row mismatch");
    cols += Value(p.id).cols();
    needs = needs || Needs(p);
  }
  if (parts.size() == 1 && !recording()) return parts[0];
  Matrix out(rows, cols);
  int offset = 0;
  for (Var p : parts) {
    const Matrix& in = Value(p.id);
    for (int i = 0; i < rows; ++i)
      std::copy(in.row(i).begin(), in.row(i).end(), out.row(i).begin() + offset);
    offset += in.cols();
  }
  Var v = Push(std::move(out), needs);
  if (nodes_[v.id].requires_grad) {
    std::vector<Var> saved(parts.begin(), parts.end());
    nodes_[v.id].backward = [this, saved = std::move(saved), v] {
      const Matrix& g = GradBuf(v.id);
      int off = 0;
      for (Var p : saved) {
        const int c = Value(p.id).cols();
        if (Needs(p)) {
          Matrix& gp = GradBuf(p.id);
          for (int i = 0; i < g.rows(); ++i) {
            auto gr = g.row(i);
            auto out = gp.row(i);
            for (int j = 0; j < c; ++j) out[j] += gr[off + j];
          }
        }
        off += c;
      }
    };
  }
  return v;
}

Var Tape::Element(Var x, int r, int c) {
  Check(x);
  const Matrix& in = Value(x.id);
  if (r < 0 || r >= in.rows() || c < 0 || c >= in.cols()) {
    throw ConfigurationError("Element index out of range");
  }
  Var v = Push(Matrix(1, 1, in(r, c)), Needs(x));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, x, v, r, c] {
      GradBuf(x.id)(r, c) += GradBuf(v.id)[0];
    };
  }
  return v;
}

Var Tape::MeanSquaredError(Var pred, const Matrix& target) {
  Check(pred);
  const Matrix& p = Value(pred.id);
  if (p.size() != target.size() || p.size() == 0) {
    throw std::invalid_argument("MeanSquaredError: length mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - target[i];
    total += d * d;
  }
  const double n = static_cast<double>(p.size());
  Var v = Push(Matrix(1, 1, total / n), Needs(pred));
  if (nodes_[v.id].requires_grad) {
    nodes_[v.id].backward = [this, pred, v, target, n] {
      const double g = GradBuf(v.id)[0];
      const Matrix& pv = Value(pred.id);
      Matrix& gp = GradBuf(pred.id);
      for (std::size_t i = 0; i < pv.size(); ++i) gp[i] += g * 2.0 * (pv[i] - target[i]) / n;
    };
  }
  return v;
}

void Tape::Backward(Var loss, double seed) {
  if (!recording()) throw StateError("Backward() on an inference tape");
  if (nodes_.empty()) throw StateError("Backward() without a recorded forward pass");
  if (backward_done_) throw StateError("Backward() called twice on one recording");
  Check(loss);
  if (Value(loss.id).size() != 1) throw StateError("Backward() needs a scalar loss");
  backward_done_ = true;
  if (!Needs(loss)) return;
  GradBuf(loss.id)[0] += seed;
  for (int i = loss.id; i >= 0; --i) {
    Node& n = nodes_[i];
    if (n.requires_grad && n.backward && !n.grad.empty()) n.backward();
  }
}

}  // namespace hintguess::nn
