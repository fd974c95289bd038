#ifndef GINDEPTH_GROEBNER_HPP
#define GINDEPTH_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "gindepth/monomial_ideal.hpp"
#include "gindepth/polynomial.hpp"

namespace gindepth {

// Ideal presented by polynomial generators over one field.
class PolynomialIdeal {
 public:
  PolynomialIdeal(std::size_t ambient, const Field& f);  // zero ideal
  static PolynomialIdeal make(std::size_t ambient, const Field& f,
                              std::vector<Polynomial> gens);

  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;

 private:
  std::size_t ambient_;
  Field field_;
  std::vector<Polynomial> gens_;
};

// Remainder of full division: no remainder term is divisible by the leading
// monomial of any divisor. Divisors are tried in list order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// The reduced basis: monic, mutually tail-reduced, sorted by ascending
// leading monomial. Canonical for the ideal under the fixed order.
std::vector<Polynomial> reduced_basis(const PolynomialIdeal& i);

// Ideal of leading monomials of the reduced basis.
MonomialIdeal initial_ideal(const PolynomialIdeal& i);

// Same ideal with every generator rewritten through the coordinate change.
PolynomialIdeal change_coordinates(const PolynomialIdeal& i, const LinearChange& g);

struct GinResult {
  MonomialIdeal value;                 // majority outcome across samples
  bool agreed;                         // all samples identical
  std::vector<MonomialIdeal> samples;  // one initial ideal per coordinate draw
};

// Initial ideal after a random coordinate change, sampled `trials` times with
// seeds seed+1 .. seed+trials. All-distinct samples raise an instability
// error instead of guessing.
GinResult generic_initial_ideal(const PolynomialIdeal& i, std::uint64_t seed,
                                unsigned trials = 3);

}  // namespace gindepth

#endif
