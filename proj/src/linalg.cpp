#include "gindepth/linalg.hpp"

namespace gindepth {

namespace {

// Row-reduce in place; returns pivot column of each pivot row.
std::vector<std::size_t> row_echelon(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
  Matrix w = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < w.cols(); ++col) {
    std::size_t p = col;
    while (p < w.rows() && w.at(p, col).is_zero()) ++p;
    if (p == w.rows()) return Scalar::zero(m.field());
    if (p != col) {
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(p, j), w.at(col, j));
      det = -det;
    }
    det = det * w.at(col, col);
    Scalar inv = w.at(col, col).inverse();
    for (std::size_t i = col + 1; i < w.rows(); ++i) {
      if (w.at(i, col).is_zero()) continue;
      Scalar factor = w.at(i, col) * inv;
      for (std::size_t j = col; j < w.cols(); ++j)
        w.at(i, j) = w.at(i, j) - factor * w.at(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorKind::dimension_mismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  auto pivots = row_echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return row_echelon(w).size();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  Matrix w = m;
  auto pivots = row_echelon(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free_col] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -w.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gindepth
