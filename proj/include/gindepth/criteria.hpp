#ifndef GINDEPTH_CRITERIA_HPP
#define GINDEPTH_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gindepth/groebner.hpp"
#include "gindepth/hilbert.hpp"
#include "gindepth/monomial_ideal.hpp"

namespace gindepth {

// Outcome of the socle-extension test at one cut r: bar_phi(J, r) must exceed
// big_pi(J, r) by exactly one generator u lying in the socle of the quotient
// by big_pi(J, r). When that hypothesis holds, three structural consequences
// are checked against J itself; any failure rules J out as the (generic)
// initial ideal of a prime.
struct SocleCutRecord {
  std::size_t r = 0;
  bool hypothesis = false;
  std::optional<Monomial> u;  // ambient r, set exactly when hypothesis holds
  // Set exactly when the hypothesis holds.
  // 1: u = 1 with (x1..xr) contained in J, or J has exactly one minimal
  //    generator outside k[x1..xr].
  // 2: if u != 1, that one extra generator equals u * x_{r+1}^e with e > 0.
  // 3: if u != 1, every minimal generator lies in k[x1..x_{r+1}].
  std::optional<bool> conclusion1;
  std::optional<bool> conclusion2;
  std::optional<bool> conclusion3;

  bool all_conclusions() const;
};

enum class ScanVerdict { no_r_applicable, consistent, obstructed };

std::string to_string(ScanVerdict v);

struct ObstructionReport {
  bool borel = false;
  std::vector<SocleCutRecord> records;  // r = 1..n-1, present only when borel
  ScanVerdict verdict = ScanVerdict::no_r_applicable;
  std::optional<std::size_t> obstructed_r;  // smallest r with a failed conclusion
  std::string message;
};

// The phrase reported whenever the scan obstructs.
extern const char* const kObstructionPhrase;

// Single-cut test; contract error unless J is Borel type and 1 <= r <= n-1.
SocleCutRecord socle_cut_check(const MonomialIdeal& j, std::size_t r);

// Runs socle_cut_check at every cut. Non-Borel input short-circuits to
// obstructed, since generic initial ideals are always of Borel type.
ObstructionReport prime_obstruction_scan(const MonomialIdeal& j);

// n minus the largest variable index appearing in a minimal generator.
// Equals depth of the original quotient when J is the gin of a prime.
// Contract error unless J is Borel type and neither zero nor unit.
int depth_from_gin(const MonomialIdeal& j);

// Largest minimal-generator degree minus one. Equals the regularity of the
// original quotient when J is the gin of a prime in characteristic zero.
// Contract error unless J is Borel type and neither zero nor unit.
int regularity_from_gin(const MonomialIdeal& j);

// Coefficient comparison between S/J, S/J1 and S/J2, where J1 extends the
// generators of J supported on x1..xr back to S and J2 = big_phi(J, r).
// With d = dim(S/J) and idx = r + d - n, the e-tables must satisfy
//   e_i(S/J) = e_i(S/J2)            for 0 <= i <= idx,
//   e_i(S/J) = e_i(S/J1)            for 0 <= i <= idx - 1,
//   e_idx(S/J1) - e_idx(S/J) = (-1)^idx * rank,
// where rank is the vector-space dimension of bar_phi(J,r) / big_pi(J,r).
struct CoefficientJumpRecord {
  std::size_t r = 0;
  int d = 0;
  std::size_t idx = 0;
  std::vector<long long> e_full;       // e_i(S/J),  i = 0..idx
  std::vector<long long> e_extended;   // e_i(S/J1), i = 0..idx
  std::vector<long long> e_saturated;  // e_i(S/J2), i = 0..idx
  long long rank = 0;
  bool head_matches_saturated = false;
  bool head_matches_extended = false;
  bool jump_matches_rank = false;

  bool holds() const {
    return head_matches_saturated && head_matches_extended && jump_matches_rank;
  }
};

// Contract error unless J is Borel type and r >= n - dim(S/J); internal error
// if the collapse quotient has infinite rank (impossible for Borel inputs).
CoefficientJumpRecord coefficient_jump_check(const MonomialIdeal& j, std::size_t r);

// True exactly when J = (x1^e) with e > 0: the only monomial ideals of height
// one that arise as the gin of a homogeneous prime. Contract error when the
// ambient ring has fewer than three variables.
bool is_height_one_prime_gin(const MonomialIdeal& j);

// Artinian-collapse analysis at c = n - dim(S/J): compares the degree of
// S/big_phi(J, c) with the length of the artinian quotient by big_pi(J, c),
// and takes rank(bar_phi/big_pi) = 1 as the authoritative trigger for the
// almost-Cohen-Macaulay conclusion. Structural consequences are then checked
// against J; violations obstruct primality.
struct SectionReport {
  std::size_t c = 0;
  long long deg_collapsed = 0;  // e_0 of S / big_phi(J, c)
  long long deg_artinian = 0;   // length of S(c) / big_pi(J, c)
  bool jump_is_one = false;
  bool generators_in_c_plus_1_vars = false;
  std::optional<bool> almost_cm_claim;  // set exactly when jump_is_one
  std::vector<std::string> violations;  // failed structural consequences
};

// Contract error unless J is Borel type with dim(S/J) >= 1.
SectionReport artinian_section(const MonomialIdeal& j);

// Depth of S/P located by comparing Hilbert coefficients before and after s
// general hyperplane sections: with d = dim(S/P) and r = n - s, the claim
// depth(S/P) = s - 1 is issued exactly when
//   e_{d-s}(S/P) = e_{d-s}(S(r)/P_s) - (-1)^{d-s},
// while e_i must agree for i < d - s on any prime input (a violation is
// surfaced as a warning, not an error, since it indicates a non-prime input
// or a bad random sample).
struct DepthReport {
  std::size_t s = 0;
  std::size_t r = 0;
  int d = 0;
  std::uint64_t seed = 0;
  unsigned trials = 0;
  bool gin_agreed = false;
  std::vector<long long> e_full;     // e_i(S/P),      i = 0..d-s
  std::vector<long long> e_section;  // e_i(S(r)/P_s), i = 0..d-s
  bool head_matches = false;         // prefix agreement for i <= d-s-1
  bool criterion_triggered = false;
  std::optional<int> depth_claim;  // s - 1, set exactly when triggered
  int gin_depth = 0;               // independent crosscheck from the gin
  std::vector<std::string> warnings;
};

// Contract error unless P is homogeneous and 1 <= s <= d, where d is read off
// the pure-power profile of gin(P).
DepthReport depth_from_sections(const PolynomialIdeal& p, std::size_t s,
                                std::uint64_t seed, unsigned trials = 3);

}  // namespace gindepth

#endif
