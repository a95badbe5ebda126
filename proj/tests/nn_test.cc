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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "hintguess/errors.h"
#include "hintguess/nn/grad_check.h"
#include "hintguess/nn/layers.h"
#include "hintguess/nn/matrix.h"
#include "hintguess/nn/tape.h"
#include "hintguess/random.h"

namespace hintguess::nn {
namespace {

using Rows = std::vector<std::vector<double>>;

Matrix RandomMatrix(int r, int c, Rng& rng) {
  Matrix m(r, c);
  for (double& x : m.data()) x = 2.0 * Uniform01(rng) - 1.0;
  return m;
}

Rows RandomRows(int n, int w, Rng& rng) { return UnstackRows(RandomMatrix(n, w, rng)); }

// Plain triple loop.
Rows NaiveMatMul(const Rows& a, const Matrix& b) {
  Rows out(a.size(), std::vector<double>(b.cols(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k) out[i][j] += a[i][k] * b(k, j);
  return out;
}

// Scaled dot-product attention written out element by element.
Rows NaiveAttentionLayer(const ParameterSet& p, const std::string& prefix, int layer, int heads,
                         ScaleMode mode, const Rows& queries, const Rows& context) {
  const std::string base = prefix + "." + std::to_string(layer) + ".";
  const Rows q = NaiveMatMul(queries, p.Get(base + "query").value);
  const Rows k = NaiveMatMul(context, p.Get(base + "key").value);
  const Rows v = NaiveMatMul(context, p.Get(base + "value").value);
  const int dm = static_cast<int>(q[0].size());
  const int hd = dm / heads;
  const double scale = mode == ScaleMode::kByKeyDim ? 1.0 / std::sqrt(hd)
                                                    : 1.0 / std::sqrt(context.size());
  Rows mixed(queries.size(), std::vector<double>(dm, 0.0));
  for (int h = 0; h < heads; ++h) {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      std::vector<double> logits(context.size());
      double mx = -1e300;
      for (std::size_t j = 0; j < context.size(); ++j) {
        double s = 0.0;
        for (int c = 0; c < hd; ++c) s += q[i][h * hd + c] * k[j][h * hd + c];
        logits[j] = s * scale;
        mx = std::max(mx, logits[j]);
      }
      double z = 0.0;
      for (double& l : logits) z += (l = std::exp(l - mx));
      for (std::size_t j = 0; j < context.size(); ++j)
        for (int c = 0; c < hd; ++c) mixed[i][h * hd + c] += logits[j] / z * v[j][h * hd + c];
    }
  }
  return NaiveMatMul(mixed, p.Get(base + "output").value);
}

double MaxDiff(const Rows& a, const Rows& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

TEST(MatrixTest, MatMulMatchesTripleLoop) {
  Rng rng = MakeRng(1);
  const Matrix a = RandomMatrix(4, 7, rng), b = RandomMatrix(7, 3, rng);
  EXPECT_LT(MaxDiff(UnstackRows(MatMul(a, b)), NaiveMatMul(UnstackRows(a), b)), 1e-14);
  Matrix out(4, 4);
  MatMulTransposedBInto(a, a, out);
  EXPECT_LT(MaxAbsDiff(out, MatMul(a, Transpose(a))), 1e-14);
}

TEST(MatrixTest, SoftmaxRowsIsStableUnderSentinels) {
  const Matrix p = SoftmaxRows(Matrix::FromRows({{1000.0, -1e9, 1000.0}, {0.0, 0.0, 0.0}}));
  EXPECT_DOUBLE_EQ(p(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(p(0, 1), 0.0);
  EXPECT_TRUE(p.AllFinite());
  for (int r = 0; r < 2; ++r) EXPECT_NEAR(p(r, 0) + p(r, 1) + p(r, 2), 1.0, 1e-15);
}

TEST(MlpTest, ForwardMatchesHandComputedNetwork) {
  ParameterSet p;
  Rng rng = MakeRng(2);
  Mlp mlp("m", {2, 3, 1});
  mlp.Init(p, rng);
  p.Get("m.0.weight").value = Matrix::FromRows({{1, -1, 0.5}, {2, 1, -3}});
  p.Get("m.0.bias").value = Matrix::FromRows({{0.1, 0.2, 0.3}});
  p.Get("m.1.weight").value = Matrix::FromRows({{1}, {2}, {3}});
  p.Get("m.1.bias").value = Matrix::FromRows({{-1}});
  // h = relu([1+4+.1, -1+2+.2, .5-6+.3]) = [5.1, 1.2, 0]; out = 5.1 + 2.4 - 1.
  const std::vector<double> x = {1.0, 2.0};
  EXPECT_NEAR(MlpForward(p, mlp, x)[0], 6.5, 1e-12);
}

TEST(MlpTest, InitUsesFanInScaleAndZeroBias) {
  ParameterSet p;
  Rng rng = MakeRng(3);
  Mlp("m", {16, 8}).Init(p, rng);
  for (double w : p.Get("m.0.weight").value.data()) EXPECT_LE(std::abs(w), 0.25);
  for (double b : p.Get("m.0.bias").value.data()) EXPECT_EQ(b, 0.0);
}

struct AttentionCase {
  int heads;
  int layers;
  ScaleMode mode;
};

class AttentionOracleTest : public ::testing::TestWithParam<AttentionCase> {};

TEST_P(AttentionOracleTest, SelfAttentionMatchesNaive) {
  const AttentionCase c = GetParam();
  Rng rng = MakeRng(4);
  Attention att("a", {c.heads, c.layers, 12, c.mode}, 8);
  ParameterSet p;
  att.Init(p, rng);
  const Rows x = RandomRows(5, 8, rng);
  Rows h = x;
  for (int l = 0; l < c.layers; ++l) h = NaiveAttentionLayer(p, "a", l, c.heads, c.mode, h, h);
  EXPECT_LT(MaxDiff(SelfAttention(p, att, x), h), 1e-12);
}

TEST_P(AttentionOracleTest, CrossAttentionMatchesNaive) {
  const AttentionCase c = GetParam();
  Rng rng = MakeRng(5);
  Attention att("c", {c.heads, c.layers, 12, c.mode}, 6, 8, true);
  ParameterSet p;
  att.Init(p, rng);
  const Rows queries = RandomRows(3, 6, rng), context = RandomRows(7, 8, rng);
  Rows h = queries;
  for (int l = 0; l < c.layers; ++l) {
    h = NaiveAttentionLayer(p, "c", l, c.heads, c.mode, h, context);
  }
  EXPECT_LT(MaxDiff(CrossAttention(p, att, queries, context), h), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Specs, AttentionOracleTest,
                         ::testing::Values(AttentionCase{1, 1, ScaleMode::kByKeyDim},
                                           AttentionCase{3, 1, ScaleMode::kByKeyDim},
                                           AttentionCase{1, 4, ScaleMode::kByKeyDim},
                                           AttentionCase{3, 4, ScaleMode::kByInputCount}));

TEST(AttentionTest, SelfAttentionIsPermutationEquivariant) {
  Rng rng = MakeRng(6);
  Attention att("a", {2, 2, 8, ScaleMode::kByKeyDim}, 8);
  ParameterSet p;
  att.Init(p, rng);
  const Rows x = RandomRows(4, 8, rng);
  const Rows px = {x[2], x[0], x[3], x[1]};
  const Rows y = SelfAttention(p, att, x), py = SelfAttention(p, att, px);
  EXPECT_LT(MaxDiff({y[2], y[0], y[3], y[1]}, py), 1e-13);
}

TEST(AttentionTest, RejectsEmptyInputAndBadSpecs) {
  Rng rng = MakeRng(7);
  Attention att("a", {}, 4);
  ParameterSet p;
  att.Init(p, rng);
  EXPECT_THROW(SelfAttention(p, att, {}), std::invalid_argument);
  EXPECT_THROW(SelfAttention(p, att, {{1.0, 2.0}}), ConfigurationError);
  EXPECT_THROW(Attention("b", {3, 1, 8, ScaleMode::kByKeyDim}, 8), ConfigurationError);
}

TEST(TapeTest, BackwardMatchesHandDerivative) {
  // loss = mean((relu(x w) - t)^2) with one active and one inactive unit.
  ParameterSet p;
  Parameter& w = p.Add("w", 1, 2);
  w.value = Matrix::FromRows({{2.0, -1.0}});
  Tape tape;
  Var y = tape.Relu(tape.MatMul(tape.Constant(Matrix::FromRows({{3.0}})), tape.Param(w)));
  Var loss = tape.MeanSquaredError(y, Matrix::FromRows({{1.0, 0.0}}));
  EXPECT_DOUBLE_EQ(tape.scalar(loss), 12.5);
  tape.Backward(loss);
  EXPECT_DOUBLE_EQ(w.grad(0, 0), 15.0);  // (6 - 1) * 3
  EXPECT_DOUBLE_EQ(w.grad(0, 1), 0.0);
  EXPECT_THROW(tape.Backward(loss), StateError);
}

TEST(TapeTest, InferenceTapeLeavesGradientsUntouched) {
  ParameterSet p;
  Parameter& w = p.Add("w", 1, 1);
  w.value(0, 0) = 3.0;
  Tape tape(Tape::Mode::kInference);
  Var y = tape.MeanSquaredError(tape.Param(w), Matrix(1, 1, 0.0));
  EXPECT_DOUBLE_EQ(tape.scalar(y), 9.0);
  EXPECT_FALSE(p.HasNonZeroGrad());
}

TEST(SgdTest, StepsAgainstGradientAndClears) {
  ParameterSet p;
  Parameter& w = p.Add("w", 1, 2);
  w.value = Matrix::FromRows({{1.0, 1.0}});
  w.grad = Matrix::FromRows({{0.5, -2.0}});
  SgdStep(p, 0.1);
  EXPECT_DOUBLE_EQ(w.value(0, 0), 0.95);
  EXPECT_DOUBLE_EQ(w.value(0, 1), 1.2);
  EXPECT_FALSE(p.HasNonZeroGrad());
  EXPECT_THROW(SgdStep(p, -1.0), std::invalid_argument);
}

TEST(MseTest, LossAndGradient) {
  const std::vector<double> pred = {1.0, 3.0}, target = {0.0, 1.0};
  const MseResult r = MseLoss(pred, target);
  EXPECT_DOUBLE_EQ(r.loss, 2.5);
  EXPECT_DOUBLE_EQ(r.grad[0], 1.0);
  EXPECT_DOUBLE_EQ(r.grad[1], 2.0);
}

LossBuilder AttentionLoss(const Attention& att, const Matrix& x, const Mlp& head) {
  return [&att, x, &head](Tape& tape, ParameterSet& p) {
    Var h = att.SelfAttend(tape, p, tape.Constant(x));
    return tape.MeanSquaredError(head.Forward(tape, p, tape.MeanRows(h)), Matrix(1, 1, 0.3));
  };
}

TEST(GradCheckTest, AttentionGradientsMatchFiniteDifferences) {
  Rng rng = MakeRng(8);
  Attention att("a", {2, 2, 8, ScaleMode::kByKeyDim}, 6);
  Mlp head("h", {8, 16, 1});
  ParameterSet p;
  att.Init(p, rng);
  head.Init(p, rng);
  const GradCheckResult r = GradCheck(p, AttentionLoss(att, RandomMatrix(4, 6, rng), head));
  EXPECT_LT(r.max_relative_error, 1e-4);
  EXPECT_EQ(r.coords_checked + r.kinks_skipped, static_cast<int>(p.NumScalars()));
  EXPECT_FALSE(p.HasNonZeroGrad());
}

TEST(GradCheckTest, DetectsCorruptedGradient) {
  Rng rng = MakeRng(9);
  Attention att("a", {}, 6);
  Mlp head("h", {6, 1});
  ParameterSet p;
  att.Init(p, rng);
  head.Init(p, rng);
  GradCheckOptions options;
  options.corrupt = [](ParameterSet& ps) { ps.Get("a.0.key").grad[3] += 1e-2; };
  const GradCheckResult r =
      GradCheck(p, AttentionLoss(att, RandomMatrix(3, 6, rng), head), options);
  EXPECT_GT(r.max_relative_error, 1e-4);
  EXPECT_EQ(r.worst_parameter, "a.0.key");
  EXPECT_EQ(r.worst_index, 3);
}

TEST(GradCheckTest, SkipsStepsAcrossReluKink) {
  // The pre-activation sits 1e-7 above zero, inside the +-1e-5 step.
  ParameterSet p;
  Parameter& b = p.Add("b", 1, 1);
  b.value(0, 0) = 1e-7;
  LossBuilder loss = [](Tape& tape, ParameterSet& ps) {
    return tape.MeanSquaredError(tape.Relu(tape.Param(ps.Get("b"))), Matrix(1, 1, 1.0));
  };
  GradCheckOptions options;
  EXPECT_EQ(GradCheck(p, loss, options).kinks_skipped, 1);
  options.skip_kinks = false;
  EXPECT_GT(GradCheck(p, loss, options).max_relative_error, 0.1);
}

}  // namespace
}  // namespace hintguess::nn
