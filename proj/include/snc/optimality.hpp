#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snc/verify.hpp"

namespace snc {

enum class Qualification { F0ContinuousAtFeasiblePoint, InteriorMeetsDomF0 };

std::string to_string(Qualification q);
/// "f0-continuous-at-feasible-point" or "interior-meets-dom-f0".
Qualification parse_qualification(const std::string& text);

/// min f0(y) subject to the constraint family, with candidate x.
struct ProgramInstance {
  PolyhedralFunction objective;
  Constraints constraints;
  Vec x;
  Qualification qualification = Qualification::F0ContinuousAtFeasiblePoint;
  Vec witness;
};

/// g0 in d f0(x), q = sum multipliers_i generators_i in the constraint cone, g0 + q = 0.
struct Certificate {
  Vec g0;
  Vec q;
  std::vector<Vec> generators;
  std::vector<Rational> multipliers;
};

enum class OptVerdict { Optimal, NotOptimal, Inconclusive, ConditionHolds };

std::string to_string(OptVerdict v);

struct OptimalityResult {
  OptVerdict verdict = OptVerdict::Inconclusive;
  std::optional<Certificate> certificate;
  std::optional<Vec> better_point;
  std::optional<Rational> better_value;
  std::optional<Vec> improving_direction;  // objective unbounded below along it
  Rational value_at_x;
  ConeGen cone;
  Exactness exactness = Exactness::InnerApproximation;
  std::optional<bool> frechet_contains_q;  // quasi-convex checker only
  std::string note;
};

/// Throws PreconditionError unless the witness satisfies the declared qualification.
void validate_qualification(const ProgramInstance& prog);

/// Recomputes every membership of the certificate from scratch.
bool verify_certificate(const PolyhedralFunction& f0, const Vec& x, const ConeGen& cone, const Certificate& c);

/// Exact min of f0 over P: value and minimizer, or an unbounded direction.
struct DirectMinimum {
  LpResult::Status status = LpResult::Status::Infeasible;
  Rational value;
  Vec point;
  Vec direction;
};
DirectMinimum minimize_over(const PolyhedralFunction& f0, const PolyhedronH& P);

/// Convex program with a SupFamily constraint: decides theta in d f0(x) + K with K the
/// formula cone, and cross-checks failures by direct minimization when K is exact.
/// Throws PreconditionError on infeasible x, or when the qualification or the hull closure condition fails.
OptimalityResult check_optimal_convex(const ProgramInstance& prog, const Rational& eps, const SGrid& grid,
                                      FormulaMode mode, const FormulaOptions& options = {});

/// Quasi-convex necessary condition: theta in d f0(x) + K_qc, with a Frechet-side witness.
/// Missing or failed closure evidence gives Inconclusive.
OptimalityResult check_necessary_qc(const ProgramInstance& prog, const Rational& eps, const ClosureEvidence& evidence,
                                    std::size_t per_axis = 9);

/// Pythagorean parameterization a(u) = ((1 - u^2), 2u) / (1 + u^2) of the unit
/// circle, sampled at u_j = lo + (hi - lo) j / 2^k, j = 0 .. 2^k - 1.
struct CircleSampler {
  Rational lo = -1;
  Rational hi = 1;
  Rational b = 1;

  struct Sample {
    Rational u;
    Vec a;
    Rational b;
  };
  std::vector<Sample> sample(int level) const;
};

/// min <c, y> subject to <a_t, y> <= b_t.
struct LinearSIPInstance {
  Vec c;
  std::vector<std::pair<Vec, Rational>> finite;
  std::optional<CircleSampler> sampler;
  Vec x;
};

struct SipLevel {
  int level = 0;
  std::size_t points = 0;
  ConeGen cone;
  Rational residual;       // sup-norm distance from -c to the formula cone
  Rational hull_residual;  // sup-norm distance from -c to the hull at eps
};

struct SipResult {
  OptVerdict verdict = OptVerdict::Inconclusive;
  std::vector<SipLevel> levels;
  /// Index of the constraint (finite) or of the sample (coarsest level reaching zero) per multiplier.
  std::vector<std::pair<std::size_t, Rational>> multipliers;
  std::optional<Vec> better_point;
  std::optional<Vec> improving_direction;
  std::optional<bool> formula_agrees;  // finite family: formula cone equals the classical cone
  bool residual_non_increasing = true;
  std::string note;
};

/// Finite family: the classical active-constraint condition, confirmed by LP when it fails.
/// Sampled family: formula cone and residuals per refinement level.
/// Throws PreconditionError naming the first violated constraint or sample.
SipResult check_sip_linear(const LinearSIPInstance& instance, const Rational& eps, const std::vector<int>& levels);

}  // namespace snc
