// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace driftshap {

// Dense row-major matrix of doubles. Plain container: no finiteness or shape
// invariants beyond rows*cols == data size (Sample enforces the domain rules).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}
  Matrix(int rows, int cols, std::vector<double> data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::span<const double> row(int i) const { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
  std::span<double> row(int i) { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace driftshap
