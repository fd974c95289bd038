#ifndef GINDEPTH_TESTS_GEN_HPP
#define GINDEPTH_TESTS_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gindepth/monomial.hpp"
#include "gindepth/monomial_ideal.hpp"

namespace gindepth::testgen {

// All monomials of n variables with total degree exactly d / at most d.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d);
std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d);

// Seeded random monomial ideal: 1..max_gens generators of degree 1..max_degree.
MonomialIdeal random_monomial_ideal(std::mt19937_64& gen, std::size_t n,
                                    std::uint32_t max_degree, std::size_t max_gens);

// Seeded random Borel-type ideal: random generators closed under the exchange
// moves x_j -> x_i^s (i < j), with random witness exponents s, degree-capped;
// the s = 1 fallback keeps closure finite.
MonomialIdeal random_borel_ideal(std::mt19937_64& gen, std::size_t n,
                                 std::uint32_t max_degree, std::size_t max_gens);

}  // namespace gindepth::testgen

#endif
