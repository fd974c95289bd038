#ifndef GINDEPTH_LINALG_HPP
#define GINDEPTH_LINALG_HPP

#include <optional>
#include <vector>

#include "gindepth/field.hpp"

namespace gindepth {

// Dense matrix over a field, row-major. Sized for desk-scale elimination.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

Scalar determinant(const Matrix& m);                 // square only
std::optional<Matrix> inverse(const Matrix& m);      // nullopt when singular
std::size_t rank(const Matrix& m);
// Basis of the right kernel {x : m x = 0}, each vector of length cols().
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

}  // namespace gindepth

#endif
