#ifndef GINDEPTH_SECTIONS_HPP
#define GINDEPTH_SECTIONS_HPP

#include <cstdint>
#include <vector>

#include "gindepth/groebner.hpp"

namespace gindepth {

// Ideal generated by the images of the generators under iterated substitution
// along the forms; lands in ambient() - forms.size() variables. Surjectivity
// of the substitution makes the generator images generate the full image.
PolynomialIdeal image_ideal(const PolynomialIdeal& i,
                            const std::vector<LinearForm>& forms);

// Ideal generated by the degree >= k part of a homogeneous ideal.
PolynomialIdeal truncate_ideal(const PolynomialIdeal& i, std::uint32_t k);

// I : x_n^infinity for homogeneous I, exact: strip powers of the last
// variable from the reduced basis (valid for this monomial order) and
// re-reduce.
PolynomialIdeal saturate_last_variable(const PolynomialIdeal& i);

// I : l^infinity, exact through a coordinate change sending l to the last
// variable. The generators of the result are its canonical reduced basis.
PolynomialIdeal saturate_by_form(const PolynomialIdeal& i, const LinearForm& l);

// Irrelevant-ideal saturation, sampled along two independently seeded general
// forms; for a general form each sample equals the true saturation, and
// disagreement raises a degenerate-sampler error instead of guessing.
PolynomialIdeal saturate_homogeneous(const PolynomialIdeal& i, std::uint64_t seed);

struct SectionResult {
  PolynomialIdeal image;      // unsaturated pushforward
  PolynomialIdeal saturated;  // its irrelevant-ideal saturation
  std::vector<LinearForm> forms;
};

// Section by s successive seeded random hyperplanes. s = 0 returns the input
// together with its saturation.
SectionResult hyperplane_section(const PolynomialIdeal& i, std::size_t s,
                                 std::uint64_t seed);

}  // namespace gindepth

#endif
