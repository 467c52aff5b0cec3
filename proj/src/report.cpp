#include "snc/report.hpp"

#include <cstdio>
#include <sstream>

#include "snc/oracle.hpp"
#include "snc/suite.hpp"

namespace snc {

std::string to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::Human: return "human";
    case ReportFormat::Machine: return "machine";
    case ReportFormat::Csv: return "csv";
  }
  return "?";
}

ReportFormat parse_format(const std::string& text) {
  if (text == "human") return ReportFormat::Human;
  if (text == "machine") return ReportFormat::Machine;
  if (text == "csv") return ReportFormat::Csv;
  throw InputError("unknown report format '" + text + "' (expected human, machine or csv)");
}

void ReportFile::add(Json record) {
  if (record.value("verdict", "") == to_string(Verdict::Violation)) ++violations;
  if (record.value("inconclusive", false)) ++inconclusive;
  if (record.value("pass", false)) ++passed;
  else ++failed;
  records.push_back(std::move(record));
}

int ReportFile::exit_code() const {
  if (violations > 0 || failed > inconclusive) return kExitViolation;
  if (inconclusive > 0) return kExitInconclusive;
  return kExitOk;
}

namespace {

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", r.get_d());
  return buf;
}

Json summary_json(const ReportFile& r) {
  return Json{{"type", "summary"},   {"title", r.title},
              {"records", r.records.size()}, {"passed", r.passed},
              {"failed", r.failed},  {"violations", r.violations},
              {"inconclusive", r.inconclusive}, {"exit_code", r.exit_code()}};
}

std::string cone_text(const Json& cone) {
  if (cone.empty()) return "{0}";
  std::string s = "cone{";
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t j = 0; j < cone[i].size(); ++j) s += (j ? "," : "") + cone[i][j].get<std::string>();
    s += ")";
  }
  return s + "}";
}

std::string human_line(const Json& r) {
  std::string s = std::string(r.value("pass", false) ? "[pass] " : r.value("inconclusive", false) ? "[inconclusive] " : "[FAIL] ");
  s += r.value("type", "") + " " + r.value("id", "");
  if (r.contains("epsilon")) s += " eps=" + r["epsilon"].get<std::string>();
  if (r.contains("verdict")) s += " " + r["verdict"].get<std::string>();
  if (r.contains("formula")) s += " formula=" + cone_text(r["formula"]);
  else if (r.contains("cone")) s += " cone=" + cone_text(r["cone"]);
  if (r.contains("better_point")) s += " better_point=" + r["better_point"].dump();
  if (r.contains("improving_direction")) s += " improving_direction=" + r["improving_direction"].dump();
  if (r.contains("levels")) {
    for (const auto& l : r["levels"]) {
      s += "\n    level " + std::to_string(l["level"].get<int>()) + " (" + std::to_string(l["points"].get<std::size_t>()) +
           " points): residual " + l["residual"].get<std::string>() + " ~ " +
           l["residual_decimal_nonauthoritative"].get<std::string>();
    }
  }
  if (r.contains("detail")) s += " (" + r["detail"].get<std::string>() + ")";
  if (r.contains("note") && !r["note"].get<std::string>().empty()) s += " [" + r["note"].get<std::string>() + "]";
  return s;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string render_records(const ReportFile& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Machine:
      for (const auto& r : report.records) out << r.dump() << "\n";
      out << summary_json(report).dump() << "\n";
      break;
    case ReportFormat::Human:
      if (!report.title.empty()) out << report.title << "\n";
      for (const auto& r : report.records) out << human_line(r) << "\n";
      out << report.records.size() << " records: " << report.passed << " passed, " << report.failed << " failed, "
          << report.violations << " violations, " << report.inconclusive << " inconclusive; exit " << report.exit_code()
          << "\n";
      break;
    case ReportFormat::Csv: {
      bool sip = false;
      for (const auto& r : report.records) sip = sip || r.contains("levels");
      if (sip) {
        out << "id,epsilon,level,points,residual,residual_decimal_nonauthoritative,hull_residual,"
               "hull_residual_decimal_nonauthoritative\n";
        for (const auto& r : report.records) {
          if (!r.contains("levels")) continue;
          for (const auto& l : r["levels"]) {
            out << csv_field(r["id"].get<std::string>()) << "," << r["epsilon"].get<std::string>() << "," << l["level"].get<int>()
                << "," << l["points"].get<std::size_t>() << "," << l["residual"].get<std::string>() << ","
                << l["residual_decimal_nonauthoritative"].get<std::string>() << "," << l["hull_residual"].get<std::string>()
                << "," << l["hull_residual_decimal_nonauthoritative"].get<std::string>() << "\n";
          }
        }
      } else {
        out << "type,id,epsilon,verdict,pass\n";
        for (const auto& r : report.records) {
          out << csv_field(r.value("type", "")) << "," << csv_field(r.value("id", "")) << "," << r.value("epsilon", "") << ","
              << r.value("verdict", "") << "," << (r.value("pass", false) ? "true" : "false") << "\n";
        }
      }
      break;
    }
  }
  return out.str();
}

Json to_json(const VerificationReport& r) {
  Json j{{"type", "verify"},          {"id", r.id},
         {"target", to_string(r.target)}, {"epsilon", json_rational(r.eps)}};
  if (r.target == Target::Sublevel) {
    j["grid"] = r.grid;
    j["mode"] = to_string(r.mode);
  }
  j["verdict"] = to_string(r.verdict);
  j["exactness"] = to_string(r.exactness);
  j["formula"] = json_cone(r.formula);
  j["oracle"] = json_cone(r.oracle);
  if (r.witness) j["witness"] = json_vec(*r.witness);
  j["pass"] = r.verdict != Verdict::Violation;
  return j;
}

Json to_json(const std::string& id, const OptimalityResult& r) {
  Json j{{"type", "optimality"}, {"id", id}, {"verdict", to_string(r.verdict)}, {"value_at_x", json_rational(r.value_at_x)},
         {"exactness", to_string(r.exactness)}, {"cone", json_cone(r.cone)}};
  if (r.certificate) {
    Json gens = Json::array(), mult = Json::array();
    for (const auto& g : r.certificate->generators) gens.push_back(json_vec(g));
    for (const auto& m : r.certificate->multipliers) mult.push_back(json_rational(m));
    j["certificate"] = Json{{"g0", json_vec(r.certificate->g0)},
                            {"q", json_vec(r.certificate->q)},
                            {"generators", gens},
                            {"multipliers", mult}};
  }
  if (r.better_point) j["better_point"] = json_vec(*r.better_point);
  if (r.better_value) j["better_value"] = json_rational(*r.better_value);
  if (r.improving_direction) j["improving_direction"] = json_vec(*r.improving_direction);
  if (r.frechet_contains_q) j["frechet_contains_q"] = *r.frechet_contains_q;
  j["note"] = r.note;
  j["inconclusive"] = r.verdict == OptVerdict::Inconclusive;
  j["pass"] = r.verdict != OptVerdict::Inconclusive;
  return j;
}

Json to_json(const std::string& id, const SipResult& r) {
  Json j{{"type", "sip"}, {"id", id}, {"verdict", to_string(r.verdict)}};
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back(Json{{"level", l.level},
                          {"points", l.points},
                          {"cone", json_cone(l.cone)},
                          {"residual", json_rational(l.residual)},
                          {"residual_decimal_nonauthoritative", decimal(l.residual)},
                          {"hull_residual", json_rational(l.hull_residual)},
                          {"hull_residual_decimal_nonauthoritative", decimal(l.hull_residual)}});
  }
  if (!r.levels.empty()) j["levels"] = levels;
  Json mult = Json::array();
  for (const auto& [i, v] : r.multipliers) mult.push_back(Json{{"index", i}, {"value", json_rational(v)}});
  j["multipliers"] = mult;
  if (r.better_point) j["better_point"] = json_vec(*r.better_point);
  if (r.improving_direction) j["improving_direction"] = json_vec(*r.improving_direction);
  if (r.formula_agrees) j["formula_agrees"] = *r.formula_agrees;
  j["residual_non_increasing"] = r.residual_non_increasing;
  j["note"] = r.note;
  j["inconclusive"] = r.verdict == OptVerdict::Inconclusive;
  j["pass"] = r.verdict != OptVerdict::Inconclusive;
  return j;
}

namespace {

Json refused_record(const std::string& type, const std::string& id, const Rational& eps, const std::string& why) {
  return Json{{"type", type},           {"id", id},          {"epsilon", json_rational(eps)}, {"verdict", "refused"},
              {"detail", why},          {"inconclusive", true}, {"pass", false}};
}

ProgramInstance program_from(const InstanceFile& f) {
  if (!f.qualification) throw InputError("$: check-optimal needs a \"qualification\"");
  return ProgramInstance{*f.objective, f.constraints(), f.require_point(), *f.qualification, *f.witness};
}

}  // namespace

ReportFile run_instance(const InstanceFile& file, const RunOptions& options) {
  ReportFile report;
  report.title = file.command;
  const std::vector<Rational> eps_list = options.epsilon.empty() ? file.epsilons() : options.epsilon;
  const SGrid grid = options.s_grid ? SGrid::parse(*options.s_grid) : file.grid();
  const FormulaMode mode = options.mode.value_or(file.formula_mode());
  const std::string id = "instance";

  if (file.command == "normal-cone" || file.command == "dom-cone" || file.command == "qc") {
    const Target target = file.command == "normal-cone" ? Target::Sublevel : file.command == "dom-cone" ? Target::Dom : Target::Qc;
    const Vec& x = file.require_point();
    Constraints cs = file.constraints();
    for (const auto& eps : eps_list) {
      FormulaInstance in{id, target, cs, x, eps, grid, mode, file.closure_evidence.value_or(ClosureEvidence::none()), options.formula};
      try {
        report.add(to_json(verify_formula_instance(in)));
      } catch (const RefusedError& e) {
        report.add(refused_record("verify", id, eps, e.what()));
      }
    }
    return report;
  }

  if (file.command == "check-optimal") {
    ProgramInstance prog = program_from(file);
    for (const auto& eps : eps_list) {
      OptimalityResult r = file.convex_family()
                               ? check_optimal_convex(prog, eps, grid, mode, options.formula)
                               : check_necessary_qc(prog, eps, file.closure_evidence.value_or(ClosureEvidence::none()));
      Json j = to_json(id, r);
      j["epsilon"] = json_rational(eps);
      report.add(std::move(j));
    }
    return report;
  }

  if (file.command == "check-sip") {
    const SipSpec& s = *file.sip;
    LinearSIPInstance in{s.cost, s.constraints, s.sampler, file.require_point()};
    std::vector<int> levels = s.levels;
    if (levels.empty() && s.sampler) levels = {4, 5, 6, 7, 8, 9, 10};
    for (const auto& eps : eps_list) {
      Json j = to_json(id, check_sip_linear(in, eps, levels));
      j["epsilon"] = json_rational(eps);
      report.add(std::move(j));
    }
    return report;
  }
  throw InputError("$.command: unknown command \"" + file.command + "\"");
}

namespace {

std::vector<VerificationReport> verify_all(const std::vector<FormulaInstance>& ins, bool parallel) {
  return parallel ? verify_batch_parallel(ins) : verify_batch_serial(ins);
}

FamilyMember affine(const std::string& id, Vec slope, long intercept) {
  return {id, PolyhedralFunction::affine(std::move(slope), Rational(intercept))};
}

Vec v2(long a, long b) { return {Rational(a), Rational(b)}; }

// Verification record that must come out equal with the stated cone.
Json expect_equal(const FormulaInstance& in, const ConeGen& expected) {
  VerificationReport r = verify_formula_instance(in);
  Json j = to_json(r);
  j["expected"] = json_cone(expected);
  j["pass"] = r.verdict == Verdict::Equal && cone_equal(r.formula, expected);
  return j;
}

std::vector<FormulaInstance> with_options(std::vector<FormulaInstance> ins, const FormulaOptions& o) {
  for (auto& in : ins) in.options = o;
  return ins;
}

Json program_record(const ProgramCase& pc) {
  OptimalityResult r = check_optimal_convex(pc.program, Rational(1), default_grid(), pc.mode);
  const auto& fam = std::get<SupFamily>(pc.program.constraints);
  DirectMinimum direct = minimize_over(pc.program.objective, sup_sublevel_polyhedron(fam, Rational(0)));
  const bool x_min = direct.status == LpResult::Status::Optimal && direct.value == r.value_at_x;
  Json j = to_json(pc.id, r);
  j["direct_minimum"] = direct.status == LpResult::Status::Optimal ? json_rational(direct.value) : Json("unbounded");
  j["pass"] = x_min ? r.verdict == OptVerdict::Optimal : r.verdict == OptVerdict::NotOptimal;
  j["inconclusive"] = false;
  return j;
}

}  // namespace

ReportFile run_curated_suite(const SuiteOptions& options) {
  ReportFile report;
  report.title = "curated suite";
  const FormulaOptions& fo = options.formula;

  // sublevel sets of finite sup families
  {
    SupFamily orthant(2, {affine("f1", v2(1, 0), 0), affine("f2", v2(0, 1), 0)});
    FormulaInstance in{"orthant", Target::Sublevel, orthant, v2(0, 0), Rational(1), default_grid(), FormulaMode::ExactAffine,
                       ClosureEvidence::check(), fo};
    report.add(expect_equal(in, ConeGen(2, {v2(1, 0), v2(0, 1)})));
    in.id = "interior-point";
    in.x = v2(-1, -1);
    report.add(expect_equal(in, ConeGen(2)));
    PolyhedronH half(2);
    half.add(v2(1, 1), Rational(0));
    SupFamily with_improper(2, {affine("f1", v2(1, 0), 0), {"d", ImproperFunction{half}}});
    in = FormulaInstance{"orthant-with-improper", Target::Sublevel, with_improper, v2(0, 0), Rational(1, 2), default_grid(),
                         FormulaMode::ExactAffine, ClosureEvidence::check(), fo};
    report.add(expect_equal(in, ConeGen(2, {v2(1, 0), v2(1, 1)})));
  }
  for (const auto& r : verify_all(with_options(curated_max_affine(), fo), options.parallel)) {
    Json j = to_json(r);
    j["pass"] = r.verdict == Verdict::Equal;
    report.add(std::move(j));
  }

  // domains
  {
    PolyhedronH d1(2), d2(2);
    d1.add(v2(1, 0), Rational(0));
    d2.add(v2(0, 1), Rational(0));
    SupFamily fam(2, {{"g1", PolyhedralFunction({{v2(1, 1), Rational(-3)}}, d1)}, {"g2", ImproperFunction{d2}}});
    for (const auto& eps : {Rational(1), Rational(1, 2)}) {
      FormulaInstance in{"domain-quadrant", Target::Dom, fam, v2(0, 0), eps, default_grid(), FormulaMode::ExactAffine,
                         ClosureEvidence::check(), fo};
      report.add(expect_equal(in, ConeGen(2, {v2(1, 0), v2(0, 1)})));
    }
  }

  // quasi-convex families: normal cone, outer cone, witness search
  for (const auto& c : curated_smooth_qc()) {
    FormulaInstance in{c.id, Target::Qc, c.qc, c.x, Rational(1, 4), default_grid(), FormulaMode::Sampled, ClosureEvidence::check(), fo};
    VerificationReport v = verify_formula_instance(in);
    Json j = to_json(v);
    j["pass"] = v.verdict == Verdict::Equal;
    report.add(std::move(j));

    FrechetResult fr = frechet_outer_cone(c.qc, c.x, Rational(1, 4));
    report.add(Json{{"type", "frechet-containment"},
                    {"id", c.id},
                    {"epsilon", "1/4"},
                    {"cone", json_cone(fr.cone)},
                    {"samples", fr.samples},
                    {"pass", cone_subset(v.formula, fr.cone)}});

    std::size_t generators = 0, not_found = 0;
    for (const auto& m : c.qc.members()) {
      WitnessReport lr = subgradient_witness_search(m, c.x, Rational(1, 16));
      generators += lr.entries.size();
      not_found += lr.not_found;
    }
    report.add(Json{{"type", "witness-search"},
                    {"id", c.id},
                    {"epsilon", "1/16"},
                    {"generators", generators},
                    {"not_found", not_found},
                    {"pass", not_found == 0}});
  }

  // one-dimensional closure identity
  for (const auto& c : curated_closure_cases()) {
    ClosureVerdict cv = sublevel_closure_identity(c.f);
    report.add(Json{{"type", "closure-identity"}, {"id", c.id}, {"lsc", c.f.is_lsc()}, {"pass", cv.holds}});
  }

  // optimality
  {
    Rng rng(options.seed + 7000);
    for (int i = 0; i < 10; ++i) {
      char id[48];
      std::snprintf(id, sizeof id, "program-%02d", i);
      report.add(program_record(gen_program(rng, id)));
    }
    SipResult tangent = check_sip_linear(circle_tangent_instance(), Rational(1), {4, 5, 6, 7, 8, 9, 10});
    Json j = to_json("circle-tangent", tangent);
    j["epsilon"] = "1";
    j["pass"] = tangent.verdict == OptVerdict::Optimal && tangent.residual_non_increasing;
    report.add(std::move(j));
  }
  return report;
}

ReportFile run_random_suite(const SuiteOptions& options) {
  ReportFile report;
  report.title = "random suite (seed " + std::to_string(options.seed) + ")";
  Rng rng(options.seed);
  std::vector<FormulaInstance> ins;
  for (std::size_t i = 0; i < options.count; ++i) {
    char id[48];
    std::snprintf(id, sizeof id, "random-%04zu", i);
    switch (i % 4) {
      case 0: ins.push_back(gen_affine_instance(rng, id, options.dim)); break;
      case 1: ins.push_back(gen_max_affine_instance(rng, id, options.dim)); break;
      case 2: ins.push_back(gen_dom_instance(rng, id, options.dim)); break;
      default: ins.push_back(gen_qc_instance(rng, id, options.dim)); break;
    }
    ins.back().options = options.formula;
  }
  for (const auto& r : verify_all(ins, options.parallel)) report.add(to_json(r));
  for (std::size_t i = 0; i < options.count / 5; ++i) {
    char id[48];
    std::snprintf(id, sizeof id, "random-program-%04zu", i);
    report.add(program_record(gen_program(rng, id, options.dim)));
  }
  return report;
}

ReportFile run_full_suite(const SuiteOptions& options) {
  ReportFile full = run_curated_suite(options);
  full.title = "full suite (seed " + std::to_string(options.seed) + ")";
  ReportFile random = run_random_suite(options);
  for (auto& r : random.records) full.add(std::move(r));
  return full;
}

}  // namespace snc
