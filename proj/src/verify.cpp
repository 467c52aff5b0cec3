#include "snc/verify.hpp"

#include <chrono>
#include <exception>

#include "snc/oracle.hpp"

namespace snc {

std::string to_string(Target t) {
  switch (t) {
    case Target::Sublevel: return "sublevel";
    case Target::Dom: return "dom";
    case Target::Qc: return "qc";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::FormulaStrictlyInside: return "formula-strictly-inside";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

Target parse_target(const std::string& text) {
  if (text == "sublevel") return Target::Sublevel;
  if (text == "dom") return Target::Dom;
  if (text == "qc") return Target::Qc;
  throw InputError("unknown target '" + text + "' (expected sublevel, dom or qc)");
}

namespace {

const SupFamily& sup_family(const FormulaInstance& in) {
  if (const auto* f = std::get_if<SupFamily>(&in.constraints)) return *f;
  throw InputError("instance " + in.id + ": target " + to_string(in.target) + " needs a convex family");
}

}  // namespace

VerificationReport verify_formula_instance(const FormulaInstance& in) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = in.id;
  r.target = in.target;
  r.eps = in.eps;
  r.grid = in.grid.to_string();
  r.mode = in.mode;

  switch (in.target) {
    case Target::Sublevel: {
      const SupFamily& fam = sup_family(in);
      FormulaResult f = sublevel_normal_cone_formula(fam, in.x, in.eps, in.grid, in.mode, in.options);
      r.formula = f.cone;
      r.exactness = f.exactness;
      r.oracle = polyhedron_normal_cone(sup_sublevel_polyhedron(fam, Rational(0)), in.x);
      break;
    }
    case Target::Dom: {
      const SupFamily& fam = sup_family(in);
      DomConeResult d = dom_sup_normal_cone(fam, in.x, in.eps);
      r.formula = d.cone;
      r.exactness = Exactness::Exact;
      r.oracle = polyhedron_normal_cone(dom_polyhedron(fam), in.x);
      break;
    }
    case Target::Qc: {
      const auto* qc = std::get_if<SublevelOracleQC>(&in.constraints);
      if (!qc) throw InputError("instance " + in.id + ": target qc needs a quasi-convex family");
      QcConeResult c = qc_sublevel_normal_cone(*qc, in.x, in.eps, in.evidence);
      r.formula = c.cone;
      r.exactness = Exactness::Exact;
      r.oracle = polyhedron_normal_cone(qc_sublevel_polyhedron(*qc), in.x);
      break;
    }
  }

  if (auto w = cone_subset_witness(r.formula, r.oracle)) {
    r.verdict = Verdict::Violation;
    r.witness = std::move(w);
  } else if (auto v = cone_subset_witness(r.oracle, r.formula)) {
    r.verdict = Verdict::FormulaStrictlyInside;
    r.witness = std::move(v);
  } else {
    r.verdict = Verdict::Equal;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> verify_batch_serial(const std::vector<FormulaInstance>& instances) {
  std::vector<VerificationReport> out;
  out.reserve(instances.size());
  for (const auto& in : instances) out.push_back(verify_formula_instance(in));
  return out;
}

std::vector<VerificationReport> verify_batch_parallel(const std::vector<FormulaInstance>& instances) {
  const long n = static_cast<long>(instances.size());
  std::vector<VerificationReport> out(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = verify_formula_instance(instances[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace snc
