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

#ifndef HINTGUESS_NN_MATRIX_H_
#define HINTGUESS_NN_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hintguess::nn {

// Dense row-major matrix of doubles. Row vectors are 1 x n matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  Matrix(int rows, int cols, std::vector<double> data);

  static Matrix FromRows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix RowVector(std::span<const double> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) { return data_[Index(r, c)]; }
  double operator()(int r, int c) const { return data_[Index(r, c)]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  std::vector<double>& storage() { return data_; }
  const std::vector<double>& storage() const { return data_; }

  void Fill(double value);
  bool AllFinite() const;
  bool SameShape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// out = a * b, or out += a * b when accumulate is set.
void MatMulInto(const Matrix& a, const Matrix& b, Matrix& out, bool accumulate = false);
// out (+)= a * b^T
void MatMulTransposedBInto(const Matrix& a, const Matrix& b, Matrix& out,
                           bool accumulate = false);
// out (+)= a^T * b
void MatMulTransposedAInto(const Matrix& a, const Matrix& b, Matrix& out,
                           bool accumulate = false);

Matrix MatMul(const Matrix& a, const Matrix& b);
Matrix Transpose(const Matrix& a);

// Row-wise softmax with max subtraction.
Matrix SoftmaxRows(const Matrix& logits);

double MaxAbsDiff(const Matrix& a, const Matrix& b);

}  // namespace hintguess::nn

#endif  // HINTGUESS_NN_MATRIX_H_
