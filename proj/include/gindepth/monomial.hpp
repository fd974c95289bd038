#ifndef GINDEPTH_MONOMIAL_HPP
#define GINDEPTH_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gindepth/errors.hpp"

namespace gindepth {

// Monomial in x1..xn: an exponent vector with cached total degree.
// Variable indices in the public interface are 1-based, matching x1..xn.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exps);
  static Monomial one(std::size_t ambient);
  static Monomial variable(std::size_t ambient, std::size_t var);
  static Monomial power(std::size_t ambient, std::size_t var, std::uint32_t e);

  std::size_t ambient() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(std::size_t var) const;
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_one() const { return degree_ == 0; }
  // Largest index i with x_i dividing the monomial; 0 for 1.
  std::size_t max_variable() const;

  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const;  // "x1^2*x3", "1" for the empty product

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic order with x1 > x2 > ... > xn.
// Returns +1 if a > b, 0 if equal, -1 if a < b. Total degree decides first;
// on ties a > b exactly when the last nonzero entry of exps(a) - exps(b)
// is negative.
int grevlex_compare(const Monomial& a, const Monomial& b);
bool grevlex_less(const Monomial& a, const Monomial& b);
bool grevlex_greater(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mul(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, needs a | b
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// u / gcd(u, m), the generator-level colon step.
Monomial colon_step(const Monomial& u, const Monomial& m);
bool coprime(const Monomial& a, const Monomial& b);

// All monomials of total degree exactly d, in a fixed deterministic order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d);

}  // namespace gindepth

#endif
