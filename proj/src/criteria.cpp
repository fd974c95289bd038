#include "gindepth/criteria.hpp"

#include <algorithm>

#include "gindepth/errors.hpp"
#include "gindepth/sections.hpp"

namespace gindepth {

const char* const kObstructionPhrase =
    "cannot be the initial ideal or generic initial ideal of any prime";

namespace {

void require_borel(const MonomialIdeal& j, const char* who) {
  if (!is_borel_type(j))
    fail(ErrorKind::contract, std::string(who) + " requires a Borel-type ideal");
}

// Largest variable index appearing in any minimal generator; 0 for the zero
// and unit ideals.
std::size_t max_variable_used(const MonomialIdeal& j) {
  std::size_t best = 0;
  for (const auto& g : j.generators()) best = std::max(best, g.max_variable());
  return best;
}

std::vector<Monomial> generators_beyond(const MonomialIdeal& j, std::size_t r) {
  std::vector<Monomial> out;
  for (const auto& g : j.generators())
    if (g.max_variable() > r) out.push_back(g);
  return out;
}

}  // namespace

bool SocleCutRecord::all_conclusions() const {
  return conclusion1.value_or(false) && conclusion2.value_or(false) &&
         conclusion3.value_or(false);
}

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::no_r_applicable:
      return "no_r_applicable";
    case ScanVerdict::consistent:
      return "consistent";
    case ScanVerdict::obstructed:
      return "obstructed";
  }
  fail(ErrorKind::internal, "unknown verdict");
}

SocleCutRecord socle_cut_check(const MonomialIdeal& j, std::size_t r) {
  require_borel(j, "socle cut check");
  const std::size_t n = j.ambient();
  if (r < 1 || r + 1 > n)
    fail(ErrorKind::contract, "cut must satisfy 1 <= r <= n-1");

  SocleCutRecord rec;
  rec.r = r;

  MonomialIdeal k = big_pi(j, r);
  MonomialIdeal b = bar_phi(j, r);
  if (b == k) return rec;

  std::vector<Monomial> extras;
  for (const auto& g : b.generators())
    if (!k.contains(g)) extras.push_back(g);
  // K is contained in B, so one extra generator means B = K + (u) exactly.
  if (extras.size() != 1) return rec;
  const Monomial& u = extras.front();
  if (!socle_membership(u, k)) return rec;

  rec.hypothesis = true;
  rec.u = u;

  std::vector<Monomial> outside = generators_beyond(j, r);
  bool variables_inside = true;
  for (std::size_t v = 1; v <= r; ++v)
    if (!j.contains(Monomial::variable(n, v))) variables_inside = false;
  rec.conclusion1 = (u.is_one() && variables_inside) || outside.size() == 1;

  if (u.is_one()) {
    rec.conclusion2 = true;
    rec.conclusion3 = true;
    return rec;
  }

  bool extra_matches = false;
  if (outside.size() == 1) {
    const Monomial& v = outside.front();
    extra_matches = v.exponent(r + 1) > 0;
    for (std::size_t i = 1; i <= n && extra_matches; ++i) {
      std::uint32_t want = 0;
      if (i <= r)
        want = u.exponent(i);
      else if (i == r + 1)
        want = v.exponent(r + 1);
      if (v.exponent(i) != want) extra_matches = false;
    }
  }
  rec.conclusion2 = extra_matches;
  rec.conclusion3 = max_variable_used(j) <= r + 1;
  return rec;
}

ObstructionReport prime_obstruction_scan(const MonomialIdeal& j) {
  ObstructionReport rep;
  rep.borel = is_borel_type(j);
  if (!rep.borel) {
    rep.verdict = ScanVerdict::obstructed;
    rep.message = std::string("not of Borel type, but a generic initial ideal "
                              "always is; ") +
                  kObstructionPhrase;
    return rep;
  }
  bool any_hypothesis = false;
  for (std::size_t r = 1; r + 1 <= j.ambient(); ++r) {
    rep.records.push_back(socle_cut_check(j, r));
    const auto& rec = rep.records.back();
    if (!rec.hypothesis) continue;
    any_hypothesis = true;
    if (!rec.all_conclusions() && !rep.obstructed_r) rep.obstructed_r = r;
  }
  if (rep.obstructed_r) {
    rep.verdict = ScanVerdict::obstructed;
    rep.message = kObstructionPhrase;
  } else if (any_hypothesis) {
    rep.verdict = ScanVerdict::consistent;
    rep.message = "every applicable cut satisfies the prime consequences";
  } else {
    rep.verdict = ScanVerdict::no_r_applicable;
    rep.message = "no cut produces a single socle generator; no obstruction found";
  }
  return rep;
}

namespace {

void require_proper_borel(const MonomialIdeal& j, const char* who) {
  if (j.is_zero() || j.is_unit())
    fail(ErrorKind::contract,
         std::string(who) + " needs a nonzero, proper monomial ideal");
  require_borel(j, who);
}

}  // namespace

int depth_from_gin(const MonomialIdeal& j) {
  require_proper_borel(j, "depth from gin");
  return static_cast<int>(j.ambient() - max_variable_used(j));
}

int regularity_from_gin(const MonomialIdeal& j) {
  require_proper_borel(j, "regularity from gin");
  return static_cast<int>(j.max_generator_degree()) - 1;
}

CoefficientJumpRecord coefficient_jump_check(const MonomialIdeal& j, std::size_t r) {
  require_borel(j, "coefficient jump check");
  const std::size_t n = j.ambient();
  HilbertSummary full = hilbert_summary(j);
  const int d = full.dimension;
  if (static_cast<long long>(r) < static_cast<long long>(n) - d ||
      r > n)
    fail(ErrorKind::contract, "cut must satisfy n - dim <= r <= n");

  CoefficientJumpRecord rec;
  rec.r = r;
  rec.d = d;
  rec.idx = static_cast<std::size_t>(static_cast<long long>(r) + d -
                                     static_cast<long long>(n));

  MonomialIdeal extended = embedded(big_pi(j, r), n);
  MonomialIdeal saturated = big_phi(j, r);
  HilbertSummary s1 = hilbert_summary(extended);
  HilbertSummary s2 = hilbert_summary(saturated);

  const std::size_t count = rec.idx + 1;
  rec.e_full = hilbert_coefficients(full.reduced, count);
  rec.e_extended = hilbert_coefficients(s1.reduced, count);
  rec.e_saturated = hilbert_coefficients(s2.reduced, count);

  RankResult rank = rank_quotient(j, r);
  if (!rank.finite)
    fail(ErrorKind::internal,
         "collapse quotient has infinite rank despite a Borel-type input");
  rec.rank = rank.value;

  rec.head_matches_saturated = rec.e_full == rec.e_saturated;
  rec.head_matches_extended = true;
  for (std::size_t i = 0; i + 1 <= rec.idx; ++i)
    if (rec.e_full[i] != rec.e_extended[i]) rec.head_matches_extended = false;
  long long sign = rec.idx % 2 == 0 ? 1 : -1;
  rec.jump_matches_rank =
      rec.e_extended[rec.idx] - rec.e_full[rec.idx] == sign * rec.rank;
  return rec;
}

bool is_height_one_prime_gin(const MonomialIdeal& j) {
  if (j.ambient() < 3)
    fail(ErrorKind::contract,
         "height-one classification needs at least three variables");
  if (j.generators().size() != 1) return false;
  const Monomial& g = j.generators().front();
  return g.degree() > 0 && g.max_variable() == 1;
}

SectionReport artinian_section(const MonomialIdeal& j) {
  require_borel(j, "artinian section");
  const std::size_t n = j.ambient();
  const int d = hilbert_summary(j).dimension;
  if (d < 1)
    fail(ErrorKind::contract, "artinian section needs dim(S/J) >= 1");

  SectionReport rep;
  rep.c = n - static_cast<std::size_t>(d);
  rep.deg_collapsed = hilbert_summary(big_phi(j, rep.c)).degree;
  rep.deg_artinian = hilbert_summary(big_pi(j, rep.c)).degree;
  RankResult rank = rank_quotient(j, rep.c);
  rep.jump_is_one = rank.finite && rank.value == 1;
  rep.generators_in_c_plus_1_vars = max_variable_used(j) <= rep.c + 1;

  if (!rep.jump_is_one) return rep;
  if (!rep.generators_in_c_plus_1_vars)
    rep.violations.push_back("a generator involves a variable beyond x" +
                             std::to_string(rep.c + 1));
  if (max_variable_used(j) != rep.c + 1)
    rep.violations.push_back("no generator involves x" +
                             std::to_string(rep.c + 1) +
                             ", so the depth cannot drop");
  if (depth_from_gin(j) != d - 1)
    rep.violations.push_back("gin depth formula disagrees with dim - 1");
  rep.almost_cm_claim = rep.violations.empty();
  return rep;
}

DepthReport depth_from_sections(const PolynomialIdeal& p, std::size_t s,
                                std::uint64_t seed, unsigned trials) {
  if (!p.is_homogeneous())
    fail(ErrorKind::contract, "depth pipeline requires homogeneous generators");

  DepthReport rep;
  rep.s = s;
  rep.seed = seed;
  rep.trials = trials;

  GinResult g = generic_initial_ideal(p, seed, trials);
  const MonomialIdeal& j = g.value;
  rep.gin_agreed = g.agreed;
  if (!g.agreed)
    rep.warnings.push_back(
        "coordinate samples disagreed on the initial ideal; majority value used");
  if (j.is_unit())
    fail(ErrorKind::contract, "input generates the unit ideal");
  if (!is_borel_type(j))
    rep.warnings.push_back(
        "sampled initial ideal is not of Borel type; sample may be bad");

  const std::size_t n = p.ambient();
  std::size_t pure_powers = 0;
  for (std::size_t v = 1; v <= n; ++v)
    for (const auto& gen : j.generators())
      if (gen.degree() > 0 && gen.exponent(v) == gen.degree()) {
        ++pure_powers;
        break;
      }
  rep.d = static_cast<int>(n - pure_powers);

  // The untouched side is read from in(P): its Hilbert series equals that of
  // S/P exactly, with no dependence on the sampled coordinates.
  HilbertSummary full = hilbert_summary(initial_ideal(p));
  if (full.dimension != rep.d)
    rep.warnings.push_back(
        "pure-power profile and Hilbert dimension disagree; sample may be bad");

  if (s < 1 || static_cast<long long>(s) > rep.d)
    fail(ErrorKind::contract, "sections must satisfy 1 <= s <= dim");
  rep.r = n - s;

  SectionResult section = hyperplane_section(p, s, seed);
  HilbertSummary cut = hilbert_summary(initial_ideal(section.image));
  const std::size_t jump_index = static_cast<std::size_t>(rep.d) - s;
  if (cut.dimension != static_cast<int>(jump_index))
    rep.warnings.push_back("section dimension is off; sample may be bad");

  rep.e_full = hilbert_coefficients(full.reduced, jump_index + 1);
  rep.e_section = hilbert_coefficients(cut.reduced, jump_index + 1);

  rep.head_matches = true;
  for (std::size_t i = 0; i < jump_index; ++i)
    if (rep.e_full[i] != rep.e_section[i]) rep.head_matches = false;
  if (!rep.head_matches)
    rep.warnings.push_back(
        "coefficient prefix mismatch: input likely not prime, or sample not "
        "general; re-seed");

  long long sign = jump_index % 2 == 0 ? 1 : -1;
  rep.criterion_triggered =
      rep.e_full[jump_index] == rep.e_section[jump_index] - sign;
  if (rep.criterion_triggered) rep.depth_claim = static_cast<int>(s) - 1;

  rep.gin_depth = static_cast<int>(n - max_variable_used(j));
  if (rep.criterion_triggered && rep.depth_claim != rep.gin_depth)
    rep.warnings.push_back(
        "depth claim disagrees with the gin depth formula; re-seed or increase "
        "trials");
  return rep;
}

}  // namespace gindepth
