#ifndef GINDEPTH_POLYNOMIAL_HPP
#define GINDEPTH_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gindepth/field.hpp"
#include "gindepth/linalg.hpp"
#include "gindepth/monomial.hpp"

namespace gindepth {

struct Term {
  Scalar coeff;
  Monomial mono;
};

// Polynomial over a fixed field and ambient ring k[x1..xn]. Terms are kept
// sorted strictly descending in grevlex with no zero coefficients, so equal
// polynomials have identical representations.
class Polynomial {
 public:
  Polynomial(std::size_t ambient, const Field& f);  // zero polynomial
  Polynomial(std::size_t ambient, const Field& f, std::vector<Term> terms);

  static Polynomial constant(std::size_t ambient, const Scalar& c);
  static Polynomial term(const Scalar& c, const Monomial& m);
  static Polynomial variable(std::size_t ambient, std::size_t var, const Field& f);

  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial_times_scalar() const { return terms_.size() == 1; }

  const Term& leading_term() const;  // contract error on zero
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coeff; }

  std::uint32_t degree() const;  // contract error on zero
  bool is_homogeneous() const;   // zero counts as homogeneous

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial monic() const;  // contract error on zero

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize(std::vector<Term> terms);

  std::size_t ambient_;
  Field field_;
  std::vector<Term> terms_;
};

// Nonzero linear form c1*x1 + ... + cn*xn.
class LinearForm {
 public:
  LinearForm(std::vector<Scalar> coeffs);  // rejects the zero form

  std::size_t ambient() const { return coeffs_.size(); }
  const Field& field() const { return coeffs_.front().field(); }
  const Scalar& coefficient(std::size_t var) const;  // 1-based
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Polynomial to_polynomial() const;
  std::string to_string() const;

 private:
  std::vector<Scalar> coeffs_;
};

// Invertible change of coordinates. entry(i, j) is the coefficient of x_i in
// the image of x_j, so apply() substitutes x_j -> sum_i entry(i,j) * x_i.
class LinearChange {
 public:
  explicit LinearChange(Matrix m);  // rejects singular matrices

  std::size_t ambient() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const Field& field() const { return matrix_.field(); }
  std::optional<std::uint64_t> seed() const { return seed_; }

  LinearChange inverted() const;

  static LinearChange identity(std::size_t n, const Field& f);
  // Seeded dense sampler; resamples a singular draw up to a fixed cap and
  // then reports a degenerate sampler error.
  static LinearChange random(std::size_t n, std::uint64_t seed, const Field& f);

 private:
  Matrix matrix_;
  std::optional<std::uint64_t> seed_;
};

Polynomial apply_change(const Polynomial& f, const LinearChange& a);

// Quotient by the linear form: substitutes the last variable using l (whose
// x_n coefficient must not vanish) and lands in k[x1..x_{n-1}].
Polynomial project_pi(const Polynomial& f, const LinearForm& l);

// Iterated projection along l1, l2, ...: each later form is itself projected
// through the earlier stages before use. Reports the failing stage when an
// intermediate form degenerates.
Polynomial project_chain(const Polynomial& f, const std::vector<LinearForm>& forms);

// Seeded random nonzero linear form with entries from the field's sample
// window (all residues for F_p, small nonnegative integers for Q).
LinearForm random_linear_form(std::size_t n, std::uint64_t seed, const Field& f);

// Interprets a homogeneous degree-1 polynomial as a linear form.
std::optional<LinearForm> as_linear_form(const Polynomial& f);

}  // namespace gindepth

#endif
