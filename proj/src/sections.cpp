#include "gindepth/sections.hpp"

#include <algorithm>

#include "gindepth/errors.hpp"

namespace gindepth {

PolynomialIdeal image_ideal(const PolynomialIdeal& idl,
                            const std::vector<LinearForm>& forms) {
  if (forms.size() > idl.ambient())
    fail(ErrorKind::dimension_mismatch, "more projections than variables");
  std::vector<Polynomial> images;
  for (const auto& g : idl.generators())
    images.push_back(project_chain(g, forms));
  return PolynomialIdeal::make(idl.ambient() - forms.size(), idl.field(),
                               std::move(images));
}

PolynomialIdeal truncate_ideal(const PolynomialIdeal& idl, std::uint32_t k) {
  if (!idl.is_homogeneous())
    fail(ErrorKind::contract, "truncation requires homogeneous generators");
  std::vector<Polynomial> out;
  for (const auto& g : idl.generators()) {
    if (g.degree() >= k) {
      out.push_back(g);
      continue;
    }
    for (const auto& u : monomials_of_degree(idl.ambient(), k - g.degree()))
      out.push_back(g.times_term(Scalar::one(idl.field()), u));
  }
  return PolynomialIdeal::make(idl.ambient(), idl.field(), std::move(out));
}

PolynomialIdeal saturate_last_variable(const PolynomialIdeal& idl) {
  if (!idl.is_homogeneous())
    fail(ErrorKind::contract, "saturation requires homogeneous generators");
  if (idl.ambient() == 0)
    fail(ErrorKind::contract, "saturation requires at least one variable");
  std::size_t n = idl.ambient();
  std::vector<Polynomial> stripped;
  for (const auto& g : reduced_basis(idl)) {
    std::uint32_t drop = UINT32_MAX;
    for (const auto& t : g.terms())
      drop = std::min(drop, t.mono.exponent(n));
    std::vector<Term> divided;
    for (const auto& t : g.terms()) {
      auto e = t.mono.exponents();
      e[n - 1] -= drop;
      divided.push_back({t.coeff, Monomial(std::move(e))});
    }
    stripped.push_back(Polynomial(n, idl.field(), std::move(divided)));
  }
  auto canon = reduced_basis(PolynomialIdeal::make(n, idl.field(), std::move(stripped)));
  return PolynomialIdeal::make(n, idl.field(), std::move(canon));
}

PolynomialIdeal saturate_by_form(const PolynomialIdeal& idl, const LinearForm& l) {
  if (l.ambient() != idl.ambient())
    fail(ErrorKind::dimension_mismatch, "form lives in a different ring");
  std::size_t n = idl.ambient();
  const Field& f = idl.field();

  // Build B invertible with B e_n = l's coefficient vector; then the change
  // A = B^{-1} maps l to x_n.
  std::size_t m = 0;
  for (std::size_t v = n; v >= 1; --v)
    if (!l.coefficient(v).is_zero()) {
      m = v;
      break;
    }
  // Columns: e_j for j != m, n; column m holds e_n; column n holds l.
  Matrix b(n, n, f);
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == n) {
      for (std::size_t i = 1; i <= n; ++i) b.at(i - 1, j - 1) = l.coefficient(i);
    } else if (j == m) {
      b.at(n - 1, j - 1) = Scalar::one(f);
    } else {
      b.at(j - 1, j - 1) = Scalar::one(f);
    }
  }
  LinearChange back(b);
  LinearChange to_last = back.inverted();

  PolynomialIdeal moved = change_coordinates(idl, to_last);
  PolynomialIdeal sat = saturate_last_variable(moved);
  PolynomialIdeal restored = change_coordinates(sat, back);
  auto canon = reduced_basis(restored);
  return PolynomialIdeal::make(n, f, std::move(canon));
}

PolynomialIdeal saturate_homogeneous(const PolynomialIdeal& idl, std::uint64_t seed) {
  if (idl.ambient() == 0)
    fail(ErrorKind::contract, "saturation requires at least one variable");
  PolynomialIdeal first =
      saturate_by_form(idl, random_linear_form(idl.ambient(), seed + 1, idl.field()));
  PolynomialIdeal second =
      saturate_by_form(idl, random_linear_form(idl.ambient(), seed + 2, idl.field()));
  if (!(first.generators() == second.generators()))
    fail(ErrorKind::degenerate_sampler,
         "saturation samples disagree; re-seed or enlarge the field");
  return first;
}

SectionResult hyperplane_section(const PolynomialIdeal& idl, std::size_t s,
                                 std::uint64_t seed) {
  if (s > idl.ambient())
    fail(ErrorKind::dimension_mismatch, "more sections than variables");
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<LinearForm> forms;
    for (std::size_t k = 0; k < s; ++k)
      forms.push_back(random_linear_form(
          idl.ambient(), seed + 17 * attempt + 101 * (k + 1), idl.field()));
    try {
      PolynomialIdeal image = image_ideal(idl, forms);
      PolynomialIdeal sat = image.ambient() == 0
                                ? image
                                : saturate_homogeneous(image, seed + 17 * attempt);
      return {std::move(image), std::move(sat), std::move(forms)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::projection_undefined &&
          e.kind() != ErrorKind::degenerate_sampler)
        throw;
    }
  }
  fail(ErrorKind::degenerate_sampler,
       "no valid hyperplane chain found; re-seed or enlarge the field");
}

}  // namespace gindepth
