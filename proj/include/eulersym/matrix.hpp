#pragma once

#include <cstddef>
#include <vector>

#include "eulersym/scalar.hpp"

namespace eulersym {

/// Dense row-major rational matrix with exact Gaussian elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  void append_row(const std::vector<Scalar>& values);

  /// In-place reduced row-echelon form; returns the pivot column of each nonzero row.
  /// Zero rows are dropped.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of {x : A x = 0}, one vector per free column, in free-column order.
  std::vector<std::vector<Scalar>> nullspace() const;

  /// Solves A x = b for square invertible A; returns an empty vector when A is singular.
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;

  Matrix inverse() const;  // throws Error when singular

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace eulersym
