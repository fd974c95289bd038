#include "gindepth/monomial_ideal.hpp"

#include <algorithm>

namespace gindepth {

namespace {

void check_ambient(const MonomialIdeal& j, const MonomialIdeal& k) {
  if (j.ambient() != k.ambient())
    fail(ErrorKind::dimension_mismatch,
         "ideals in different ambients: " + std::to_string(j.ambient()) + " vs " +
             std::to_string(k.ambient()));
}

void check_r(const MonomialIdeal& j, std::size_t r) {
  if (r > j.ambient())
    fail(ErrorKind::dimension_mismatch,
         "r = " + std::to_string(r) + " exceeds ambient " + std::to_string(j.ambient()));
}

}  // namespace

MonomialIdeal MonomialIdeal::make(std::size_t ambient, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.ambient() != ambient)
      fail(ErrorKind::dimension_mismatch, "generator ambient differs from ideal ambient");
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (divides(kept, g)) {  // covers duplicates: ascending order visits equals adjacently
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
  return MonomialIdeal(ambient, std::move(minimal));
}

MonomialIdeal MonomialIdeal::zero(std::size_t ambient) {
  return MonomialIdeal(ambient, {});
}

MonomialIdeal MonomialIdeal::unit(std::size_t ambient) {
  return MonomialIdeal(ambient, {Monomial::one(ambient)});
}

std::uint32_t MonomialIdeal::max_generator_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.ambient() != ambient_)
    fail(ErrorKind::dimension_mismatch, "monomial ambient differs from ideal ambient");
  for (const auto& g : gens_)
    if (divides(g, u)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  check_ambient(*this, o);
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  check_ambient(*this, o);
  if (gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!(gens_[i] == o.gens_[i])) return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

MonomialIdeal add(const MonomialIdeal& j, const MonomialIdeal& k) {
  check_ambient(j, k);
  std::vector<Monomial> gens = j.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return MonomialIdeal::make(j.ambient(), std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& j, const Monomial& u) {
  std::vector<Monomial> gens = j.generators();
  gens.push_back(u);
  return MonomialIdeal::make(j.ambient(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& j, const MonomialIdeal& k) {
  check_ambient(j, k);
  std::vector<Monomial> gens;
  for (const auto& a : j.generators())
    for (const auto& b : k.generators()) gens.push_back(lcm(a, b));
  return MonomialIdeal::make(j.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(j.generators().size());
  for (const auto& g : j.generators()) gens.push_back(colon_step(g, m));
  return MonomialIdeal::make(j.ambient(), std::move(gens));
}

MonomialIdeal colon_saturation(const MonomialIdeal& j, const Monomial& m) {
  MonomialIdeal cur = j;
  for (;;) {
    MonomialIdeal next = colon(cur, m);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

MonomialIdeal phi(const MonomialIdeal& j, std::size_t var) {
  if (var < 1 || var > j.ambient())
    fail(ErrorKind::dimension_mismatch, "variable index outside ambient");
  std::vector<Monomial> gens;
  gens.reserve(j.generators().size());
  for (const auto& g : j.generators()) {
    auto e = g.exponents();
    e[var - 1] = 0;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(j.ambient(), std::move(gens));
}

MonomialIdeal big_phi(const MonomialIdeal& j, std::size_t r) {
  check_r(j, r);
  std::vector<Monomial> gens;
  gens.reserve(j.generators().size());
  for (const auto& g : j.generators()) {
    auto e = g.exponents();
    for (std::size_t i = r; i < e.size(); ++i) e[i] = 0;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(j.ambient(), std::move(gens));
}

MonomialIdeal big_pi(const MonomialIdeal& j, std::size_t r) {
  check_r(j, r);
  std::vector<Monomial> gens;
  for (const auto& g : j.generators()) {
    if (g.max_variable() > r) continue;
    auto e = g.exponents();
    e.resize(r);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(r, std::move(gens));
}

MonomialIdeal bar_phi(const MonomialIdeal& j, std::size_t r) {
  return big_pi(big_phi(j, r), r);
}

MonomialIdeal embedded(const MonomialIdeal& j, std::size_t ambient) {
  if (ambient < j.ambient())
    fail(ErrorKind::dimension_mismatch, "embedding target smaller than ambient");
  std::vector<Monomial> gens;
  gens.reserve(j.generators().size());
  for (const auto& g : j.generators()) {
    auto e = g.exponents();
    e.resize(ambient, 0);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::make(ambient, std::move(gens));
}

bool is_borel_type(const MonomialIdeal& j) {
  std::uint32_t cap = j.max_generator_degree();
  for (const auto& u : j.generators()) {
    std::uint32_t probe = cap + u.degree();
    for (std::size_t jj = 1; jj <= j.ambient(); ++jj) {
      if (u.exponent(jj) == 0) continue;
      Monomial base = quotient(u, Monomial::variable(j.ambient(), jj));
      for (std::size_t i = 1; i < jj; ++i) {
        if (!j.contains(mul(base, Monomial::power(j.ambient(), i, probe))))
          return false;
      }
    }
  }
  return true;
}

MonomialIdeal saturate(const MonomialIdeal& j) {
  std::size_t n = j.ambient();
  if (n == 0 || j.is_zero() || j.is_unit()) return j;
  if (is_borel_type(j)) return phi(j, n);
  MonomialIdeal cur = j;
  for (;;) {
    MonomialIdeal next = phi(cur, 1);
    for (std::size_t i = 2; i <= n; ++i) next = intersect(next, phi(cur, i));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool socle_membership(const Monomial& u, const MonomialIdeal& k) {
  if (u.ambient() != k.ambient())
    fail(ErrorKind::dimension_mismatch, "monomial ambient differs from ideal ambient");
  if (k.contains(u)) return false;
  for (std::size_t i = 1; i <= k.ambient(); ++i)
    if (!k.contains(mul(u, Monomial::variable(k.ambient(), i)))) return false;
  return true;
}

}  // namespace gindepth
