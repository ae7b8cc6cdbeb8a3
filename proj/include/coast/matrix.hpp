#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coast/kernels.hpp"

namespace coast {

// Dense column-major matrix. Columns are contiguous so per-feature
// statistics and node-major ancestral sampling run straight through the
// vector kernels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  double* col(std::size_t j) { return data_.data() + j * rows_; }
  const double* col(std::size_t j) const { return data_.data() + j * rows_; }
  std::span<const double> col_span(std::size_t j) const { return {col(j), rows_}; }
  std::span<double> col_span(std::size_t j) { return {col(j), rows_}; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double col_mean(std::size_t j) const {
    return rows_ == 0 ? 0.0 : kernels::sum(col(j), rows_) / static_cast<double>(rows_);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace coast
