#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zoll/scalar.hpp"

namespace zoll {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(Matrix m);

/// Solves a x = b for square a. Returns nullopt when a is singular.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace zoll
