#include "eulersym/matrix.hpp"

#include <utility>

#include "eulersym/error.hpp"

namespace eulersym {

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<Scalar>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t pr = lead_row;
    while (pr < rows_ && (*this)(pr, c) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != lead_row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(pr, j), (*this)(lead_row, j));
    Scalar inv = Scalar(1) / (*this)(lead_row, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(lead_row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || (*this)(r, c) == 0) continue;
      Scalar f = (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) -= f * (*this)(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  rows_ = lead_row;
  data_.resize(rows_ * cols_);
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy(*this);
  return copy.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix reduced(*this);
  auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> Matrix::solve(const std::vector<Scalar>& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw Error("solve needs a square system");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  auto pivots = aug.rref();
  if (pivots.size() != cols_ || pivots.back() != cols_ - 1) return {};
  std::vector<Scalar> x(cols_);
  for (std::size_t r = 0; r < cols_; ++r) x[r] = aug(r, cols_);
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) throw Error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace eulersym
