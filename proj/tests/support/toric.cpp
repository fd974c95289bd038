#include "support/toric.hpp"

#include <map>
#include <set>

#include "support/gen.hpp"

namespace gindepth::testgen {

namespace {

std::uint64_t weight_of(const Monomial& u, const std::vector<std::uint64_t>& w) {
  std::uint64_t s = 0;
  for (std::size_t v = 1; v <= u.ambient(); ++v)
    s += static_cast<std::uint64_t>(u.exponent(v)) * w[v - 1];
  return s;
}

}  // namespace

std::uint64_t toric_graded_count(const std::vector<std::uint64_t>& a_weights,
                                 std::uint32_t d) {
  std::set<std::uint64_t> seen;
  for (const auto& u : monomials_of_degree(a_weights.size(), d))
    seen.insert(weight_of(u, a_weights));
  return seen.size();
}

std::vector<Polynomial> primitive_binomials(
    const std::vector<std::uint64_t>& a_weights, std::uint32_t max_degree,
    const Field& f) {
  std::size_t n = a_weights.size();
  std::vector<Polynomial> out;
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    std::map<std::uint64_t, std::vector<Monomial>> buckets;
    for (const auto& u : monomials_of_degree(n, d))
      buckets[weight_of(u, a_weights)].push_back(u);
    for (const auto& [w, bucket] : buckets)
      for (std::size_t i = 0; i < bucket.size(); ++i)
        for (std::size_t j = i + 1; j < bucket.size(); ++j) {
          if (!gcd(bucket[i], bucket[j]).is_one()) continue;
          out.push_back(Polynomial::term(Scalar::one(f), bucket[i]) -
                        Polynomial::term(Scalar::one(f), bucket[j]));
        }
  }
  return out;
}

}  // namespace gindepth::testgen
