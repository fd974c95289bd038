#include "gindepth/run.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "gindepth/criteria.hpp"
#include "gindepth/errors.hpp"
#include "gindepth/hilbert.hpp"
#include "gindepth/parse.hpp"
#include "gindepth/sections.hpp"

namespace gindepth {
namespace {

MonomialIdeal as_monomial(const IdealFile& file) {
  if (!file.monomial)
    fail(ErrorKind::contract,
         "this command requires monomial generators (one term per line)");
  std::vector<Monomial> gens;
  for (const Polynomial& g : file.ideal.generators())
    gens.push_back(g.leading_monomial());
  return MonomialIdeal::make(file.ring, gens);
}

void require_homogeneous(const IdealFile& file) {
  if (!file.ideal.is_homogeneous())
    fail(ErrorKind::contract, "generators must be homogeneous");
}

ordered_json strings_of(const std::vector<Monomial>& gens) {
  ordered_json out = ordered_json::array();
  for (const Monomial& m : gens) out.push_back(m.to_string());
  return out;
}

ordered_json strings_of(const std::vector<Polynomial>& gens) {
  ordered_json out = ordered_json::array();
  for (const Polynomial& g : gens) out.push_back(g.to_string());
  return out;
}

ordered_json summary_json(const HilbertSummary& sum) {
  ordered_json result;
  result["numerator"] = sum.numerator.to_string();
  result["reduced"] = sum.reduced.to_string();
  result["dim"] = sum.dimension;
  result["degree"] = sum.degree;
  result["e"] = hilbert_coefficients(sum.reduced, sum.reduced.degree() + 1);
  return result;
}

struct CommandOutcome {
  ordered_json result;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

CommandOutcome run_hilbert(const RunOptions&, const IdealFile& file) {
  HilbertSummary sum = [&] {
    if (file.monomial) return hilbert_summary(as_monomial(file));
    require_homogeneous(file);
    return hilbert_summary(initial_ideal(file.ideal));
  }();
  return {summary_json(sum), {}, 0};
}

CommandOutcome run_in(const RunOptions&, const IdealFile& file) {
  const std::vector<Polynomial> basis = reduced_basis(file.ideal);
  ordered_json result;
  result["basis"] = strings_of(basis);
  result["initial"] = strings_of(initial_ideal(file.ideal).generators());
  return {result, {}, 0};
}

CommandOutcome run_gin(const RunOptions& opt, const IdealFile& file) {
  require_homogeneous(file);
  const GinResult gin = generic_initial_ideal(file.ideal, opt.seed, opt.trials);
  const bool borel = is_borel_type(gin.value);
  const bool proper = !gin.value.is_zero() && !gin.value.is_unit();

  ordered_json result;
  result["gin"] = strings_of(gin.value.generators());
  result["agreed"] = gin.agreed;
  result["trials"] = opt.trials;
  ordered_json seeds = ordered_json::array();
  for (unsigned k = 1; k <= opt.trials; ++k) seeds.push_back(opt.seed + k);
  result["seeds"] = seeds;
  result["borel"] = borel;
  result["depth"] = nullptr;
  result["regularity"] = nullptr;

  std::vector<std::string> warnings;
  if (!gin.agreed)
    warnings.push_back("coordinate samples disagreed; majority value reported");
  if (!borel)
    warnings.push_back(
        "sampled initial ideal is not of Borel type; the coordinate sample may "
        "be degenerate");
  if (borel && proper) {
    result["depth"] = depth_from_gin(gin.value);
    result["regularity"] = regularity_from_gin(gin.value);
    if (!file.field.is_rational())
      warnings.push_back(
          "the regularity reading assumes characteristic zero; over F_p treat "
          "it as heuristic");
  }
  return {result, warnings, 0};
}

CommandOutcome run_borel(const RunOptions&, const IdealFile& file) {
  const bool borel = is_borel_type(as_monomial(file));
  ordered_json result;
  result["borel"] = borel;
  return {result, {}, borel ? 0 : 2};
}

CommandOutcome run_obstruct(const RunOptions&, const IdealFile& file) {
  const ObstructionReport rep = prime_obstruction_scan(as_monomial(file));
  ordered_json result;
  result["borel"] = rep.borel;
  result["verdict"] = to_string(rep.verdict);
  result["obstructed_r"] =
      rep.obstructed_r ? ordered_json(*rep.obstructed_r) : ordered_json(nullptr);
  result["message"] = rep.message;
  ordered_json records = ordered_json::array();
  for (const SocleCutRecord& rec : rep.records) {
    ordered_json row;
    row["r"] = rec.r;
    row["hypothesis"] = rec.hypothesis;
    row["u"] = rec.u ? ordered_json(rec.u->to_string()) : ordered_json(nullptr);
    auto opt_bool = [](const std::optional<bool>& b) {
      return b ? ordered_json(*b) : ordered_json(nullptr);
    };
    row["conclusion1"] = opt_bool(rec.conclusion1);
    row["conclusion2"] = opt_bool(rec.conclusion2);
    row["conclusion3"] = opt_bool(rec.conclusion3);
    records.push_back(row);
  }
  result["records"] = records;
  return {result, {}, rep.verdict == ScanVerdict::obstructed ? 2 : 0};
}

CommandOutcome run_depth(const RunOptions& opt, const IdealFile& file) {
  if (!opt.s) fail(ErrorKind::contract, "depth requires --s <sections>");
  const DepthReport rep = depth_from_sections(file.ideal, *opt.s, opt.seed, opt.trials);
  ordered_json result;
  result["s"] = rep.s;
  result["r"] = rep.r;
  result["d"] = rep.d;
  result["gin_agreed"] = rep.gin_agreed;
  result["e"] = rep.e_full;
  result["e_section"] = rep.e_section;
  result["part1"] = rep.head_matches;
  result["criterion"] = rep.criterion_triggered;
  result["depth"] = rep.depth_claim ? ordered_json(*rep.depth_claim) : ordered_json(nullptr);
  result["gin_depth"] = rep.gin_depth;
  return {result, rep.warnings, rep.head_matches ? 0 : 2};
}

CommandOutcome run_section(const RunOptions&, const IdealFile& file) {
  const SectionReport rep = artinian_section(as_monomial(file));
  ordered_json result;
  result["c"] = rep.c;
  result["deg_collapsed"] = rep.deg_collapsed;
  result["deg_artinian"] = rep.deg_artinian;
  result["jump_is_one"] = rep.jump_is_one;
  result["generators_in_c_plus_1_vars"] = rep.generators_in_c_plus_1_vars;
  result["almost_cm"] =
      rep.almost_cm_claim ? ordered_json(*rep.almost_cm_claim) : ordered_json(nullptr);
  result["violations"] = rep.violations;
  const bool negative = rep.almost_cm_claim && !*rep.almost_cm_claim;
  return {result, {}, negative ? 2 : 0};
}

// Interleaved cut-then-saturate chain on a monomial ideal, from ambient n
// down to ambient r.
MonomialIdeal section_chain(MonomialIdeal j, std::size_t r) {
  while (j.ambient() > r) j = saturate(big_pi(j, j.ambient() - 1));
  return j;
}

CommandOutcome run_verify(const RunOptions& opt, const IdealFile& file) {
  require_homogeneous(file);
  const PolynomialIdeal& ideal = file.ideal;
  const std::size_t n = file.ring;
  const std::uint64_t seed = opt.seed;

  const GinResult gin = generic_initial_ideal(ideal, seed, opt.trials);
  const MonomialIdeal& j = gin.value;
  const HilbertSummary sum = hilbert_summary(j);
  if (sum.dimension < 0)
    fail(ErrorKind::contract, "verify requires a proper ideal");
  const std::size_t d = static_cast<std::size_t>(sum.dimension);
  const bool borel = is_borel_type(j);

  ordered_json checks = ordered_json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    ordered_json row;
    row["name"] = name;
    row["pass"] = pass;
    row["detail"] = detail;
    checks.push_back(row);
    all_pass = all_pass && pass;
  };

  // Cutting by one general hyperplane, then taking the gin, matches dropping
  // the last variable from the gin.
  if (n >= 2 && d >= 1) {
    bool pass = true;
    for (std::uint64_t k = 0; k < 2; ++k) {
      const SectionResult sec = hyperplane_section(ideal, 1, seed + 31 + 7 * k);
      const MonomialIdeal lhs =
          generic_initial_ideal(sec.image, seed + 41 + 7 * k, opt.trials).value;
      pass = pass && lhs == big_pi(j, n - 1);
    }
    record("hyperplane image collapse", pass, "2 independent samples");
  } else {
    record("hyperplane image collapse", true, "skipped: needs n >= 2 and dim >= 1");
  }

  // The gin of the irrelevant-ideal saturation matches saturating the gin by
  // the last variable.
  {
    const PolynomialIdeal sat = saturate_homogeneous(ideal, seed + 51);
    const MonomialIdeal lhs =
        generic_initial_ideal(sat, seed + 61, opt.trials).value;
    record("saturation collapse", lhs == phi(j, n), "one saturation sample");
  }

  // The gin of a saturated s-fold section matches the interleaved
  // cut-then-saturate chain applied to the gin.
  {
    const std::size_t limit = std::min<std::size_t>({2, d, n - 1});
    bool pass = true;
    std::ostringstream detail;
    if (limit == 0) {
      detail << "skipped: needs dim >= 1 and n >= 2";
    } else {
      for (std::size_t s = 1; s <= limit; ++s) {
        const SectionResult sec = hyperplane_section(ideal, s, seed + 71 + s);
        const MonomialIdeal lhs =
            generic_initial_ideal(sec.saturated, seed + 81 + s, opt.trials).value;
        pass = pass && lhs == section_chain(j, n - s);
        detail << (s > 1 ? ", " : "s = ") << s;
      }
    }
    record("saturated section chain", pass, detail.str());
  }

  // On the saturated gin, the interleaved chain collapses to a single
  // truncate-extend step in each codimension.
  {
    const MonomialIdeal j0 = saturate(j);
    bool pass = true;
    for (std::size_t r = 1; r + 1 <= n; ++r)
      pass = pass && section_chain(j0, r) == phi(bar_phi(j0, r), r);
    record("interleaved collapse identity",
           pass, n >= 2 ? "cuts r = 1.." + std::to_string(n - 1) : "no cuts");
  }

  // Coefficient identities between the gin, its generator restriction, and
  // its variable collapse, at every admissible cut.
  if (borel) {
    bool pass = true;
    const std::size_t lo = std::max<std::size_t>(1, n - d);
    for (std::size_t r = lo; r <= n; ++r)
      pass = pass && coefficient_jump_check(j, r).holds();
    record("coefficient jump table", pass,
           "r = " + std::to_string(lo) + ".." + std::to_string(n));
  } else {
    record("coefficient jump table", false,
           "sampled gin is not of Borel type");
  }

  ordered_json result;
  result["checks"] = checks;
  result["all_pass"] = all_pass;
  std::vector<std::string> warnings;
  if (!gin.agreed)
    warnings.push_back("coordinate samples disagreed; majority value reported");
  return {result, warnings, all_pass ? 0 : 2};
}

}  // namespace

Report run(const RunOptions& opt, const std::string& file_text) {
  const Field field = parse_field(opt.field);
  const IdealFile file = parse_ideal(file_text, field);

  CommandOutcome outcome = [&] {
    if (opt.command == "hilbert") return run_hilbert(opt, file);
    if (opt.command == "in") return run_in(opt, file);
    if (opt.command == "gin") return run_gin(opt, file);
    if (opt.command == "borel") return run_borel(opt, file);
    if (opt.command == "obstruct") return run_obstruct(opt, file);
    if (opt.command == "depth") return run_depth(opt, file);
    if (opt.command == "section") return run_section(opt, file);
    if (opt.command == "verify") return run_verify(opt, file);
    fail(ErrorKind::contract, "unknown command '" + opt.command + "'");
  }();

  Report report;
  report.document["command"] = opt.command;
  report.document["digest"] = input_digest(file_text);
  report.document["ring"] = file.ring;
  report.document["field"] = field.describe();
  report.document["seed"] = opt.seed;
  report.document["trials"] = opt.trials;
  report.document["result"] = std::move(outcome.result);
  report.document["warnings"] = outcome.warnings;
  report.exit_code = outcome.exit_code;
  return report;
}

}  // namespace gindepth
