#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snc/formulas.hpp"

namespace snc {

enum class Target { Sublevel, Dom, Qc };
enum class Verdict { Equal, FormulaStrictlyInside, Violation };

std::string to_string(Target t);
std::string to_string(Verdict v);
Target parse_target(const std::string& text);

/// One formula-versus-oracle comparison.
///
/// Violation means the formula cone is not contained in the oracle cone, which
/// no correct implementation can produce.
struct VerificationReport {
  std::string id;
  Target target = Target::Sublevel;
  Rational eps;
  std::string grid;
  FormulaMode mode = FormulaMode::Sampled;
  Verdict verdict = Verdict::Equal;
  std::optional<Vec> witness;  // a ray of one cone outside the other
  ConeGen formula;
  ConeGen oracle;
  Exactness exactness = Exactness::InnerApproximation;
  double seconds = 0;  // never serialized
};

using Constraints = std::variant<SupFamily, SublevelOracleQC>;

struct FormulaInstance {
  std::string id;
  Target target = Target::Sublevel;
  Constraints constraints;
  Vec x;
  Rational eps = 1;
  SGrid grid = default_grid();
  FormulaMode mode = FormulaMode::Sampled;
  ClosureEvidence evidence = ClosureEvidence::check();  // qc target only
  FormulaOptions options;
};

/// Computes the formula side and the oracle side and classifies the pair.
/// Throws InputError when the target does not match the constraint kind.
VerificationReport verify_formula_instance(const FormulaInstance& instance);

/// Reports in input order.
std::vector<VerificationReport> verify_batch_serial(const std::vector<FormulaInstance>& instances);

/// Same result as verify_batch_serial, instances spread over OpenMP threads.
/// The first failing instance (in input order) rethrows its exception.
std::vector<VerificationReport> verify_batch_parallel(const std::vector<FormulaInstance>& instances);

}  // namespace snc
