#ifndef GINDEPTH_TESTS_ORACLE_HPP
#define GINDEPTH_TESTS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "gindepth/linalg.hpp"
#include "gindepth/monomial.hpp"
#include "gindepth/monomial_ideal.hpp"
#include "gindepth/polynomial.hpp"

namespace gindepth::oracle {

// Membership oracles built from nothing but divisibility against generators.
// For a monomial ideal J with generator degrees at most D, a witness exponent
// D certifies every colon-saturation membership question, so the checks below
// are exact, not approximations.

// u in J : m^infinity, probed as u * m^D in J.
bool in_colon_saturation(const MonomialIdeal& j, const Monomial& m, const Monomial& u);

// u in J : maximal-ideal^infinity, probed variable by variable.
bool in_saturation(const MonomialIdeal& j, const Monomial& u);

// u in J : (x1..xi)^infinity, probed against all degree-(i*D) monomials in
// the first i variables.
bool in_partial_saturation(const MonomialIdeal& j, std::size_t i, const Monomial& u);

// Definition-level Borel-type test: every monomial of J up to the generator
// degree bound admits exchange witnesses, with s searched explicitly.
bool borel_type_by_definition(const MonomialIdeal& j);

// Two ideals agree iff they contain the same monomials up to the larger
// generator degree; this compares membership exhaustively to that bound.
bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

// Number of degree-m standard monomials of S/J, by enumeration.
std::uint64_t standard_monomials(const MonomialIdeal& j, std::uint32_t m);

// dim_k of the degree-d piece of the ideal generated by the given homogeneous
// polynomials, by row reduction of multiplication rows. No basis machinery.
std::uint64_t graded_ideal_dimension(const std::vector<Polynomial>& gens,
                                     std::size_t ambient, const Field& f,
                                     std::uint32_t d);

// Homogeneous ideal membership through ranks: appending the target row to the
// degree-deg(target) piece must leave the span unchanged.
bool in_span_of_ideal(const std::vector<Polynomial>& gens, const Polynomial& target);

}  // namespace gindepth::oracle

#endif
