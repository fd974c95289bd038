#ifndef GINDEPTH_PARSE_HPP
#define GINDEPTH_PARSE_HPP

#include <string>
#include <vector>

#include "gindepth/groebner.hpp"

namespace gindepth {

// Parsed ideal file. Grammar: the first significant line is `ring <n>`; every
// later significant line is one polynomial over x1..xn with integer
// coefficients and the operators + - * ^ (no juxtaposition). `#` starts a
// comment; blank lines are skipped. Parse failures carry 1-based line/column
// positions.
struct IdealFile {
  std::size_t ring;
  Field field;
  std::vector<std::string> sources;  // raw text of each generator line
  PolynomialIdeal ideal;
  bool monomial;  // every parsed generator is a single term
};

IdealFile parse_ideal(const std::string& text, const Field& field);

// "q" or "p:<odd prime>".
Field parse_field(const std::string& name);

}  // namespace gindepth

#endif
