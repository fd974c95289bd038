#include "gindepth/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gindepth/errors.hpp"

namespace gindepth {

PolynomialIdeal::PolynomialIdeal(std::size_t ambient, const Field& f)
    : ambient_(ambient), field_(f) {}

PolynomialIdeal PolynomialIdeal::make(std::size_t ambient, const Field& f,
                                      std::vector<Polynomial> gens) {
  PolynomialIdeal out(ambient, f);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ambient() != ambient)
      fail(ErrorKind::dimension_mismatch, "generator lives in a different ring");
    if (!(g.field() == f))
      fail(ErrorKind::field_mismatch, "generator over a different field");
    out.gens_.push_back(std::move(g));
  }
  return out;
}

bool PolynomialIdeal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors) {
    if (g.ambient() != f.ambient())
      fail(ErrorKind::dimension_mismatch, "divisor lives in a different ring");
    if (g.is_zero()) fail(ErrorKind::contract, "zero divisor in normal form");
  }
  Polynomial w = f;
  std::vector<Term> remainder;
  while (!w.is_zero()) {
    const Term lead = w.leading_term();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (!divides(g.leading_monomial(), lead.mono)) continue;
      Scalar c = lead.coeff / g.leading_coefficient();
      w = w - g.times_term(c, quotient(lead.mono, g.leading_monomial()));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      w = w - Polynomial::term(lead.coeff, lead.mono);
    }
  }
  return Polynomial(f.ambient(), f.field(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    fail(ErrorKind::contract, "s-polynomial of a zero polynomial");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(f.leading_coefficient().inverse(),
                      quotient(l, f.leading_monomial())) -
         g.times_term(g.leading_coefficient().inverse(),
                      quotient(l, g.leading_monomial()));
}

namespace {

struct SPair {
  std::size_t i, j;  // i < j
  Monomial lcm_lead;
};

// Normal selection: lowest lcm degree first, then grevlex-smallest lcm,
// then the index pair, so the walk is deterministic.
bool pair_before(const SPair& a, const SPair& b) {
  if (a.lcm_lead.degree() != b.lcm_lead.degree())
    return a.lcm_lead.degree() < b.lcm_lead.degree();
  int c = grevlex_compare(a.lcm_lead, b.lcm_lead);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

std::vector<Polynomial> reduced_basis(const PolynomialIdeal& idl) {
  std::vector<Polynomial> basis;
  for (const auto& f : idl.generators()) basis.push_back(f.monic());

  std::vector<SPair> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.push_back(
          {i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_before);
    SPair p = *it;
    pending.erase(it);
    handled.insert({p.i, p.j});

    if (coprime(basis[p.i].leading_monomial(), basis[p.j].leading_monomial()))
      continue;
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis[k].leading_monomial(), p.lcm_lead)) continue;
      auto key1 = std::minmax(p.i, k);
      auto key2 = std::minmax(k, p.j);
      chained = handled.count({key1.first, key1.second}) > 0 &&
                handled.count({key2.first, key2.second}) > 0;
    }
    if (chained) continue;

    Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs(basis.size() - 1);
  }

  // Minimalize: keep only leads not divisible by an earlier kept lead, after
  // sorting ascending so proper divisors come first.
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& h) {
      return divides(h.leading_monomial(), g.leading_monomial());
    });
    if (!redundant) kept.push_back(g);
  }

  // Tail-reduce to a fixpoint; leads are untouched by construction.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t k = 0; k < kept.size(); ++k)
        if (k != i) others.push_back(kept[k]);
      Polynomial r = normal_form(kept[i], others).monic();
      if (r != kept[i]) {
        kept[i] = std::move(r);
        changed = true;
      }
    }
  }
  return kept;
}

MonomialIdeal initial_ideal(const PolynomialIdeal& idl) {
  std::vector<Monomial> leads;
  for (const auto& g : reduced_basis(idl)) leads.push_back(g.leading_monomial());
  return MonomialIdeal::make(idl.ambient(), std::move(leads));
}

PolynomialIdeal change_coordinates(const PolynomialIdeal& idl, const LinearChange& g) {
  std::vector<Polynomial> images;
  for (const auto& f : idl.generators()) images.push_back(apply_change(f, g));
  return PolynomialIdeal::make(idl.ambient(), idl.field(), std::move(images));
}

GinResult generic_initial_ideal(const PolynomialIdeal& idl, std::uint64_t seed,
                                unsigned trials) {
  if (trials == 0) fail(ErrorKind::contract, "at least one coordinate sample is required");
  std::vector<MonomialIdeal> samples;
  for (unsigned k = 1; k <= trials; ++k) {
    LinearChange g = LinearChange::random(idl.ambient(), seed + k, idl.field());
    samples.push_back(initial_ideal(change_coordinates(idl, g)));
  }
  std::size_t best = 0, best_count = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::size_t count = static_cast<std::size_t>(
        std::count(samples.begin(), samples.end(), samples[i]));
    if (count > best_count) {
      best_count = count;
      best = i;
    }
  }
  if (trials > 1 && best_count == 1)
    fail(ErrorKind::unstable,
         "initial ideal unstable across coordinate samples; increase trials or "
         "field size");
  return {samples[best], best_count == samples.size(), std::move(samples)};
}

}  // namespace gindepth
