// End-to-end acceptance run: one line per criterion, PASS or FAIL, exit 0
// only when everything passes. Each body re-derives its expectations from
// first principles (enumeration oracles, semigroup counts, seeded sampling)
// rather than trusting the code under test.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gindepth/criteria.hpp"
#include "gindepth/errors.hpp"
#include "gindepth/groebner.hpp"
#include "gindepth/hilbert.hpp"
#include "gindepth/monomial_ideal.hpp"
#include "gindepth/sections.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"
#include "support/toric.hpp"

using namespace gindepth;

// On failure, records the failing condition and leaves the criterion body.
#define CHECK_OR_FAIL(cond)     \
  do {                          \
    if (!(cond)) {              \
      detail = #cond;           \
      return false;             \
    }                           \
  } while (0)

namespace {

const Field kF = Field::fp(32003);

Polynomial mono(std::size_t n, std::vector<std::uint32_t> e, long long c) {
  (void)n;
  return Polynomial::term(Scalar::from_int(c, kF), Monomial(std::move(e)));
}

PolynomialIdeal cubic_curve() {
  return PolynomialIdeal::make(
      4, kF,
      {mono(4, {0, 2, 0, 0}, 1) - mono(4, {1, 0, 1, 0}, 1),
       mono(4, {0, 1, 1, 0}, 1) - mono(4, {1, 0, 0, 1}, 1),
       mono(4, {0, 0, 2, 0}, 1) - mono(4, {0, 1, 0, 1}, 1)});
}

PolynomialIdeal quartic_curve() {
  return PolynomialIdeal::make(
      4, kF,
      {mono(4, {1, 0, 0, 1}, 1) - mono(4, {0, 1, 1, 0}, 1),
       mono(4, {0, 3, 0, 0}, 1) - mono(4, {2, 0, 1, 0}, 1),
       mono(4, {0, 2, 0, 1}, 1) - mono(4, {1, 0, 2, 0}, 1),
       mono(4, {0, 0, 3, 0}, 1) - mono(4, {0, 1, 0, 2}, 1)});
}

MonomialIdeal obstruction_example() {
  return MonomialIdeal::make(
      4, {Monomial({2, 0, 0, 0}), Monomial({1, 1, 0, 0}), Monomial({0, 2, 0, 0}),
          Monomial({1, 0, 1, 0}), Monomial({1, 0, 0, 1})});
}

// Interleaved cut-then-saturate chain down to ambient r.
MonomialIdeal section_chain(MonomialIdeal j, std::size_t r) {
  while (j.ambient() > r) j = saturate(big_pi(j, j.ambient() - 1));
  return j;
}

// Variables carrying a pure-power minimal generator x_v^e.
std::set<std::size_t> pure_power_variables(const MonomialIdeal& j) {
  std::set<std::size_t> vars;
  for (const Monomial& g : j.generators())
    for (std::size_t v = 1; v <= j.ambient(); ++v)
      if (g.degree() > 0 && g.exponent(v) == g.degree()) vars.insert(v);
  return vars;
}

bool criterion1(std::string& detail) {
  const ObstructionReport scan = prime_obstruction_scan(obstruction_example());
  CHECK_OR_FAIL(scan.borel);
  CHECK_OR_FAIL(scan.verdict == ScanVerdict::obstructed);
  CHECK_OR_FAIL(scan.obstructed_r && *scan.obstructed_r == 2);
  CHECK_OR_FAIL(scan.records.size() == 3);
  const SocleCutRecord& cut = scan.records[1];
  CHECK_OR_FAIL(cut.r == 2);
  CHECK_OR_FAIL(cut.hypothesis);
  CHECK_OR_FAIL(cut.u && *cut.u == Monomial({1, 0}));
  CHECK_OR_FAIL(cut.conclusion1 && *cut.conclusion1 == false);
  CHECK_OR_FAIL(std::string(kObstructionPhrase) ==
                "cannot be the initial ideal or generic initial ideal of any prime");
  CHECK_OR_FAIL(scan.message == kObstructionPhrase);
  return true;
}

bool criterion2(std::string& detail) {
  const DepthReport rep = depth_from_sections(quartic_curve(), 2, 7);
  CHECK_OR_FAIL(rep.e_full.size() == 1 && rep.e_full[0] == 4);
  CHECK_OR_FAIL(rep.e_section.size() == 1 && rep.e_section[0] == 5);
  CHECK_OR_FAIL(rep.criterion_triggered);
  CHECK_OR_FAIL(rep.depth_claim && *rep.depth_claim == 1);
  CHECK_OR_FAIL(rep.gin_depth == 1);
  CHECK_OR_FAIL(depth_from_gin(generic_initial_ideal(quartic_curve(), 7).value) == 1);
  return true;
}

bool criterion3(std::string& detail) {
  const DepthReport one = depth_from_sections(cubic_curve(), 1, 7);
  CHECK_OR_FAIL(one.head_matches);
  CHECK_OR_FAIL(one.e_full == std::vector<long long>({3, 2}));
  CHECK_OR_FAIL(one.e_section == std::vector<long long>({3, 2}));
  CHECK_OR_FAIL(!one.criterion_triggered);
  CHECK_OR_FAIL(one.gin_depth == 2);

  const DepthReport two = depth_from_sections(cubic_curve(), 2, 7);
  CHECK_OR_FAIL(two.head_matches);
  CHECK_OR_FAIL(two.e_full == std::vector<long long>({3}));
  CHECK_OR_FAIL(two.e_section == std::vector<long long>({3}));
  CHECK_OR_FAIL(!two.criterion_triggered);
  CHECK_OR_FAIL(two.gin_depth == 2);
  return true;
}

bool criterion4(std::string& detail) {
  for (std::uint32_t d = 2; d <= 5; ++d) {
    const PolynomialIdeal p = PolynomialIdeal::make(
        3, kF,
        {mono(3, {d, 0, 0}, 1) - mono(3, {0, d - 1, 1}, 1)});
    const MonomialIdeal expected =
        MonomialIdeal::make(3, {Monomial::power(3, 1, d)});
    for (const std::uint64_t seed : {101u, 202u, 303u}) {
      const GinResult g = generic_initial_ideal(p, seed, 3);
      CHECK_OR_FAIL(g.agreed);
      CHECK_OR_FAIL(g.samples.size() == 3);
      CHECK_OR_FAIL(g.value == expected);
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    const MonomialIdeal j = testgen::random_monomial_ideal(rng, n, 4, 6);
    const auto hf = hilbert_function(hilbert_numerator(j), n, 8);
    for (std::uint32_t m = 0; m <= 8; ++m)
      CHECK_OR_FAIL(static_cast<std::uint64_t>(hf[m]) ==
                    oracle::standard_monomials(j, m));
  }
  return true;
}

bool criterion6(std::string& detail) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    const MonomialIdeal j = testgen::random_borel_ideal(rng, n, 4, 5);
    const int d = hilbert_summary(j).dimension;
    if (d < 0) continue;  // unit quotient leaves no admissible cut
    const std::size_t lo =
        std::max<std::size_t>(1, n - static_cast<std::size_t>(d));
    for (std::size_t r = lo; r <= n; ++r)
      CHECK_OR_FAIL(coefficient_jump_check(j, r).holds());
  }
  return true;
}

bool criterion7(std::string& detail) {
  struct Prime {
    const char* name;
    PolynomialIdeal ideal;
    int expected_dim;
  };
  std::vector<Prime> primes;
  primes.push_back({"hyperplane",
                    PolynomialIdeal::make(3, kF,
                                          {mono(3, {1, 0, 0}, 1) +
                                           mono(3, {0, 1, 0}, 1) +
                                           mono(3, {0, 0, 1}, 1)}),
                    2});
  primes.push_back({"cubic", cubic_curve(), 2});
  primes.push_back({"quartic", quartic_curve(), 2});
  primes.push_back({"kernel(3,2,1,0)",
                    PolynomialIdeal::make(
                        4, kF, testgen::primitive_binomials({3, 2, 1, 0}, 2, kF)),
                    2});
  primes.push_back({"kernel(4,3,1,0)",
                    PolynomialIdeal::make(
                        4, kF, testgen::primitive_binomials({4, 3, 1, 0}, 3, kF)),
                    2});
  primes.push_back({"kernel(5,4,1,0)",
                    PolynomialIdeal::make(
                        4, kF, testgen::primitive_binomials({5, 4, 1, 0}, 5, kF)),
                    2});

  for (const Prime& p : primes) {
    CHECK_OR_FAIL(!p.ideal.generators().empty());
    const MonomialIdeal j = generic_initial_ideal(p.ideal, 11).value;
    if (!is_borel_type(j)) {
      detail = std::string(p.name) + ": gin not Borel";
      return false;
    }
    const int dim = hilbert_summary(j).dimension;
    if (dim != p.expected_dim) {
      detail = std::string(p.name) + ": unexpected dimension";
      return false;
    }
    const std::size_t c = p.ideal.ambient() - static_cast<std::size_t>(dim);
    std::set<std::size_t> expected_vars;
    for (std::size_t v = 1; v <= c; ++v) expected_vars.insert(v);
    if (pure_power_variables(j) != expected_vars) {
      detail = std::string(p.name) + ": pure powers not exactly x1..xc";
      return false;
    }
    const ScanVerdict verdict = prime_obstruction_scan(j).verdict;
    if (verdict == ScanVerdict::obstructed) {
      detail = std::string(p.name) + ": scan obstructed a prime's gin";
      return false;
    }
  }

  // Section commutation at three seeds on both curves.
  for (const PolynomialIdeal& p : {cubic_curve(), quartic_curve()}) {
    const MonomialIdeal j = generic_initial_ideal(p, 11).value;
    for (const std::uint64_t seed : {5u, 21u, 77u}) {
      for (std::size_t s = 1; s <= 2; ++s) {
        const SectionResult sec = hyperplane_section(p, s, seed);
        const MonomialIdeal image_gin =
            generic_initial_ideal(sec.image, seed + 1000, 3).value;
        CHECK_OR_FAIL(image_gin == big_pi(j, 4 - s));
        const MonomialIdeal saturated_gin =
            generic_initial_ideal(sec.saturated, seed + 2000, 3).value;
        CHECK_OR_FAIL(saturated_gin == section_chain(j, 4 - s));
      }
    }
  }
  return true;
}

bool criterion8(std::string& detail) {
  const HilbertSummary base = hilbert_summary(initial_ideal(cubic_curve()));
  for (std::uint64_t k = 0; k < 20; ++k) {
    const LinearChange g = LinearChange::random(4, 500 + k, kF);
    const HilbertSummary moved =
        hilbert_summary(initial_ideal(change_coordinates(cubic_curve(), g)));
    CHECK_OR_FAIL(moved.numerator == base.numerator);
    CHECK_OR_FAIL(moved.reduced == base.reduced);
    CHECK_OR_FAIL(moved.dimension == base.dimension);
  }
  return true;
}

// The two rational curves of the corpus tell the almost-Cohen-Macaulay test
// apart: both have dimension 2, but only the quartic has depth 1. The length
// of the artinian collapse exceeds the curve degree by the rank of the
// collapse quotient, so the rank-one trigger fires for the quartic (4 -> 5)
// and stays quiet for the cubic (3 -> 3).
bool criterion9(std::string& detail) {
  const MonomialIdeal jc = generic_initial_ideal(cubic_curve(), 7).value;
  const MonomialIdeal jq = generic_initial_ideal(quartic_curve(), 7).value;

  const RankResult rc = rank_quotient(jc, 2);
  const RankResult rq = rank_quotient(jq, 2);
  CHECK_OR_FAIL(rc.finite && rc.value == 0);
  CHECK_OR_FAIL(rq.finite && rq.value == 1);

  const SectionReport cubic = artinian_section(jc);
  CHECK_OR_FAIL(!cubic.jump_is_one);
  CHECK_OR_FAIL(cubic.deg_collapsed == 3 && cubic.deg_artinian == 3);
  CHECK_OR_FAIL(cubic.deg_artinian - cubic.deg_collapsed == rc.value);

  const SectionReport quartic = artinian_section(jq);
  CHECK_OR_FAIL(quartic.jump_is_one);
  CHECK_OR_FAIL(quartic.deg_collapsed == 4 && quartic.deg_artinian == 5);
  CHECK_OR_FAIL(quartic.deg_artinian - quartic.deg_collapsed == rq.value);
  CHECK_OR_FAIL(quartic.almost_cm_claim && *quartic.almost_cm_claim);

  CHECK_OR_FAIL(depth_from_gin(jq) == 1);  // the trigger names the depth-1 curve
  CHECK_OR_FAIL(depth_from_gin(jc) == 2);  // and stays quiet on the CM one
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    bool (*body)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "obstruction scan pins the canonical Borel counterexample", criterion1},
      {2, "two sections of the rational quartic reveal depth 1", criterion2},
      {3, "sections of the rational normal cubic stay consistent with depth 2",
       criterion3},
      {4, "gin of (x1^d - x2^(d-1)*x3) collapses to (x1^d) across seeds",
       criterion4},
      {5, "Hilbert series match enumerated standard monomials on 200 random "
          "monomial ideals",
       criterion5},
      {6, "coefficient identities hold at every cut on 200 random Borel ideals",
       criterion6},
      {7, "corpus primes give Borel gins with clean profiles and commuting "
          "sections",
       criterion7},
      {8, "Hilbert series is invariant under 20 random coordinate changes",
       criterion8},
      {9, "rank-one trigger separates the depth-1 quartic from the CM cubic",
       criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const Error& e) {
      detail = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.label;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
