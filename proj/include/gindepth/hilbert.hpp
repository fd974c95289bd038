#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gindepth/monomial_ideal.hpp"

namespace gindepth {

// Dense integer polynomial in one variable t, used for Hilbert numerators and
// their reductions. Coefficients are kept trimmed: empty vector = zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs);
  static IntPoly one();
  static IntPoly term(long long c, std::size_t k);  // c * t^k

  const std::vector<long long>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(std::size_t k) const;
  long long at_one() const;
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<long long> coeffs_;
};

// Exact quotient g / (1 - t), or nullopt when g(1) != 0.
std::optional<IntPoly> divide_by_one_minus_t(const IntPoly& g);

enum class PivotRule {
  most_frequent,  // variable occurring in the most generators, lowest index
  last_variable,  // highest-index variable occurring in at least two generators
};

// Numerator g(t) with sum_d dim_k(S/J)_d t^d = g(t) / (1-t)^ambient.
IntPoly hilbert_numerator(const MonomialIdeal& j,
                          PivotRule rule = PivotRule::most_frequent);

struct HilbertSummary {
  IntPoly numerator;    // g
  std::size_t ambient;  // n
  IntPoly reduced;      // q with q(1) != 0; the zero polynomial when S/J = 0
  int dimension;        // Krull dimension of S/J; -1 when S/J = 0
  long long degree;     // q(1); 0 when S/J = 0
};

HilbertSummary hilbert_summary(const MonomialIdeal& j);

// e_0 .. e_{count-1}: Taylor coefficients of the reduced numerator at t = 1,
// that is e_i = q^(i)(1) / i!.
std::vector<long long> hilbert_coefficients(const IntPoly& reduced,
                                            std::size_t count);

// dim_k(S/J)_d for d = 0..max_degree, expanded from the numerator.
std::vector<long long> hilbert_function(const IntPoly& numerator,
                                        std::size_t ambient,
                                        std::uint32_t max_degree);

struct RankResult {
  bool finite = false;
  long long value = 0;  // meaningful only when finite
};

// Vector-space dimension of bar_phi(J, r) / big_pi(J, r) over the r-variable
// subring; infinite when that quotient module has positive dimension.
RankResult rank_quotient(const MonomialIdeal& j, std::size_t r);

}  // namespace gindepth
