#ifndef GINDEPTH_MONOMIAL_IDEAL_HPP
#define GINDEPTH_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gindepth/monomial.hpp"

namespace gindepth {

// Monomial ideal given by its minimal generators, kept sorted descending in
// grevlex. The unit ideal is the single generator 1; the zero ideal has no
// generators.
class MonomialIdeal {
 public:
  static MonomialIdeal make(std::size_t ambient, std::vector<Monomial> gens);
  static MonomialIdeal zero(std::size_t ambient);
  static MonomialIdeal unit(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  std::uint32_t max_generator_degree() const;  // 0 for the zero ideal

  bool contains(const Monomial& u) const;
  // Ideal containment: every generator of o lies in *this.
  bool contains(const MonomialIdeal& o) const;

  bool operator==(const MonomialIdeal& o) const;
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens)
      : ambient_(ambient), gens_(std::move(gens)) {}

  std::size_t ambient_;
  std::vector<Monomial> gens_;
};

MonomialIdeal add(const MonomialIdeal& j, const MonomialIdeal& k);
MonomialIdeal add(const MonomialIdeal& j, const Monomial& u);
MonomialIdeal intersect(const MonomialIdeal& j, const MonomialIdeal& k);
MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m);  // J : m

// J : m^infinity, the stable value of iterated colon.
MonomialIdeal colon_saturation(const MonomialIdeal& j, const Monomial& m);

// Zero out the var-th exponent of every generator: J : x_var^infinity.
MonomialIdeal phi(const MonomialIdeal& j, std::size_t var);

// Zero out exponents r+1..n of every generator: J : (x_{r+1}...x_n)^infinity.
// Ambient stays n.
MonomialIdeal big_phi(const MonomialIdeal& j, std::size_t r);

// Keep exactly the generators supported on x1..xr, reindexed to ambient r.
MonomialIdeal big_pi(const MonomialIdeal& j, std::size_t r);

// big_pi(big_phi(J, r), r), in ambient r.
MonomialIdeal bar_phi(const MonomialIdeal& j, std::size_t r);

// The same generators viewed in a larger ambient ring.
MonomialIdeal embedded(const MonomialIdeal& j, std::size_t ambient);

// For every generator u, every x_j dividing u and every i < j, some
// x_i^s * u / x_j lies in J. One membership probe at the degree cap decides
// this, since membership is monotone in s and witnesses are generator-bounded.
bool is_borel_type(const MonomialIdeal& j);

// J : maximal-ideal^infinity. Borel-type ideals take the single-variable fast
// path phi(J, n); the general path iterates the intersection of the
// variable-wise saturations to a fixed point.
MonomialIdeal saturate(const MonomialIdeal& j);

// u not in K, and x_i * u in K for every variable of the ambient ring.
bool socle_membership(const Monomial& u, const MonomialIdeal& k);

}  // namespace gindepth

#endif
