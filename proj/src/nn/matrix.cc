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

#include "hintguess/nn/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hintguess/errors.h"

namespace hintguess::nn {
namespace {

void CheckShape(bool ok, const char* what, const Matrix& a, const Matrix& b) {
  if (!ok) {
    throw ConfigurationError(std::string(what) + ": shape mismatch (" +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + ")");
  }
}

void PrepareOut(Matrix& out, int rows, int cols, bool accumulate) {
  if (accumulate) {
    if (out.rows() != rows || out.cols() != cols) {
      throw ConfigurationError("accumulate target has wrong shape");
    }
  } else if (out.rows() != rows || out.cols() != cols) {
    out = Matrix(rows, cols);
  } else {
    out.Fill(0.0);
  }
}

}  // namespace

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("matrix data length does not match shape");
  }
}

Matrix Matrix::FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("ragged rows");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::RowVector(std::span<const double> values) {
  return Matrix(1, static_cast<int>(values.size()),
                std::vector<double>(values.begin(), values.end()));
}

void Matrix::Fill(double value) { std::fill(data_.begin(), data_.end(), value); }

bool Matrix::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void MatMulInto(const Matrix& a, const Matrix& b, Matrix& out, bool accumulate) {
  CheckShape(a.cols() == b.rows(), "MatMul", a, b);
  PrepareOut(out, a.rows(), b.cols(), accumulate);
  const int n = a.rows(), k = a.cols(), m = b.cols();
  const double* pb = b.data().data();
  for (int i = 0; i < n; ++i) {
    double* po = out.row(i).data();
    const double* pa = a.row(i).data();
    for (int p = 0; p < k; ++p) {
      const double s = pa[p];
      if (s == 0.0) continue;
      const double* brow = pb + static_cast<std::size_t>(p) * m;
      for (int j = 0; j < m; ++j) po[j] += s * brow[j];
    }
  }
}

void MatMulTransposedBInto(const Matrix& a, const Matrix& b, Matrix& out,
                           bool accumulate) {
  CheckShape(a.cols() == b.cols(), "MatMulTransposedB", a, b);
  PrepareOut(out, a.rows(), b.rows(), accumulate);
  const int n = a.rows(), k = a.cols(), m = b.rows();
  for (int i = 0; i < n; ++i) {
    const double* pa = a.row(i).data();
    double* po = out.row(i).data();
    for (int j = 0; j < m; ++j) {
      const double* pb = b.row(j).data();
      double s = 0.0;
      for (int p = 0; p < k; ++p) s += pa[p] * pb[p];
      po[j] += s;
    }
  }
}

void MatMulTransposedAInto(const Matrix& a, const Matrix& b, Matrix& out,
                           bool accumulate) {
  CheckShape(a.rows() == b.rows(), "MatMulTransposedA", a, b);
  PrepareOut(out, a.cols(), b.cols(), accumulate);
  const int n = a.rows(), k = a.cols(), m = b.cols();
  for (int r = 0; r < n; ++r) {
    const double* pa = a.row(r).data();
    const double* pb = b.row(r).data();
    for (int i = 0; i < k; ++i) {
      const double s = pa[i];
      if (s == 0.0) continue;
      double* po = out.row(i).data();
      for (int j = 0; j < m; ++j) po[j] += s * pb[j];
    }
  }
}

Matrix MatMul(const Matrix& a, const Matrix& b) {
  Matrix out;
  MatMulInto(a, b, out);
  return out;
}

Matrix Transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix SoftmaxRows(const Matrix& logits) {
  Matrix out(logits.rows(), logits.cols());
  for (int i = 0; i < logits.rows(); ++i) {
    auto in = logits.row(i);
    auto o = out.row(i);
    const double mx = *std::max_element(in.begin(), in.end());
    double total = 0.0;
    for (std::size_t j = 0; j < in.size(); ++j) {
      o[j] = std::exp(in[j] - mx);
      total += o[j];
    }
    for (double& v : o) v /= total;
  }
  return out;
}

double MaxAbsDiff(const Matrix& a, const Matrix& b) {
  if (!a.SameShape(b)) throw ConfigurationError("MaxAbsDiff: shape mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace hintguess::nn
