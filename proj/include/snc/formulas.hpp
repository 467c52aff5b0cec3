#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "snc/family.hpp"
#include "snc/qc.hpp"

namespace snc {

enum class FormulaMode { ExactAffine, Sampled };
enum class Exactness { Exact, InnerApproximation };

std::string to_string(FormulaMode m);
std::string to_string(Exactness e);
/// "exact-affine" or "sampled".
FormulaMode parse_mode(const std::string& text);

/// One contribution to the hull: which member, which branch, at which s.
struct BranchEntry {
  std::string member;
  std::string branch;  // "A", "A-tail", "A-affine-ray", "A-affine-segment", "B"
  std::optional<Rational> s;
  std::size_t points = 0;
  std::size_t rays = 0;
};

struct FormulaOptions {
  /// Test hook: reflect every contribution through the origin. Used only to
  /// check that the verification harness catches a wrong formula.
  bool inject_fault = false;
  /// Sampled mode: also run the refined grid and compare with the oracle.
  bool certify = true;
};

struct FormulaResult {
  ConeGen cone;
  GeneratorSet hull;  // closed convex hull of all contributions
  Rational epsilon;
  SGrid grid;
  FormulaMode mode = FormulaMode::Sampled;
  std::vector<BranchEntry> log;
  Exactness exactness = Exactness::InnerApproximation;
  bool grid_stable = false;
};

/// {t proper : s f_t(x) >= -eps}. Throws PreconditionError unless x is in [f <= 0] with f(x) finite.
std::vector<std::string> active_index_set(const SupFamily& family, const Vec& x, const Rational& eps, const Rational& s);

/// Weights alpha_t for the domain normal cone formula.
struct AlphaPolicy {
  enum class Kind { Rho, AllOnes, Explicit };
  Kind kind = Kind::Rho;
  std::map<std::string, Rational> weights;  // Explicit only

  static AlphaPolicy rho() { return {}; }
  static AlphaPolicy all_ones() { return {Kind::AllOnes, {}}; }
  static AlphaPolicy explicit_weights(std::map<std::string, Rational> w) { return {Kind::Explicit, std::move(w)}; }
};

/// rho_t: 1 when f_t(x) >= f(x) - eps, else -eps / (2 f_t(x) - 2 f(x) + eps).
Rational rho_weight(const Rational& ft, const Rational& f, const Rational& eps);

struct DomConeResult {
  ConeGen cone;
  GeneratorSet hull;
  std::vector<std::pair<std::string, Rational>> weights;  // proper members only
};

/// Recession cone of the hull of the d_eps(alpha_t f_t)(x) over proper members
/// and the eps-normal sets of the improper members' domains.
/// Throws PreconditionError unless f(x) is finite; InputError when the policy is invalid.
DomConeResult dom_sup_normal_cone(const SupFamily& family, const Vec& x, const Rational& eps,
                                  const AlphaPolicy& policy = AlphaPolicy::rho());

/// Normal cone to [f <= 0] at x from the eps-subdifferentials of the scaled members.
/// Exact-affine mode requires every proper member to be affine on the whole space.
FormulaResult sublevel_normal_cone_formula(const SupFamily& family, const Vec& x, const Rational& eps,
                                          const SGrid& grid, FormulaMode mode, const FormulaOptions& options = {});

struct IntersectionResult {
  ConeGen cone;              // recession cone of the intersection of the hulls
  PolyhedronH intersection;  // intersection of the hulls over the eps list
  std::vector<Rational> epsilons;
  /// Exact-affine mode only: each hull equals the previous one scaled by the eps ratio.
  std::optional<bool> scaling_consistent;
};

/// Intersection of the closed convex hulls over a finite decreasing eps list.
IntersectionResult sublevel_normal_cone_intersection(const SupFamily& family, const Vec& x,
                                                     const std::vector<Rational>& eps_list, const SGrid& grid,
                                                     FormulaMode mode, const FormulaOptions& options = {});

/// One-member case; the union over s needs no hull over t.
FormulaResult singleton_sublevel_normal_cone(const PolyhedralFunction& f, const Vec& x, const Rational& eps,
                                            const SGrid& grid, const FormulaOptions& options = {});

/// A point where every piece of every proper member is <= -delta and every domain
/// constraint holds with slack delta, for some delta > 0; nullopt when none exists.
std::optional<Vec> slater_point(const SupFamily& family);

/// Normal cone to cl([f < 0]) at x. Throws PreconditionError when the
/// continuity hypothesis (Slater-type point) fails.
FormulaResult strict_sublevel_normal_cone(const SupFamily& family, const Vec& x, const Rational& eps,
                                         const SGrid& grid, FormulaMode mode, const FormulaOptions& options = {});

/// Outcome of the closure conditions cl[f <= 0] = cap [cl f_t <= 0]
/// and cl[f <= 0] = cap cl[f_t <= 0].
struct ClosureConditionVerdict {
  bool hull_condition = false;
  bool member_condition = false;
  std::optional<Vec> witness;  // point in exactly one side of a failed identity
  PolyhedronH closure_of_sublevel;
  PolyhedronH hull_side;     // cap [cl f_t <= 0]
  PolyhedronH closure_side;  // cap cl[f_t <= 0]
};

/// Compares the three polyhedra exactly. No implication between the two conditions is assumed.
ClosureConditionVerdict compare_closure_sides(const PolyhedronH& closure_of_sublevel, const PolyhedronH& hull_side,
                                const PolyhedronH& closure_side);

/// Throws PreconditionError when [f <= 0] is empty.
ClosureConditionVerdict closure_condition_check(const SupFamily& family);
ClosureConditionVerdict closure_condition_check(const SublevelOracleQC& qc);

/// A point of P outside Q, if any.
std::optional<Vec> point_outside(const PolyhedronH& P, const PolyhedronH& Q);

struct QcConeResult {
  ConeGen cone;
  GeneratorSet hull;
  std::string evidence;  // how the closure condition was established
};

/// Recession cone of the hull of the eps-normal sets N^eps_{[f_t <= 0]}(x).
/// Throws RefusedError when the closure condition cannot be established from the evidence.
QcConeResult qc_sublevel_normal_cone(const SublevelOracleQC& qc, const Vec& x, const Rational& eps,
                                     const ClosureEvidence& evidence);

/// Deterministic lattice of the sup-norm ball B(x, r) with `per_axis` points per
/// coordinate, ordered by distance from x and then lexicographically.
std::vector<Vec> ball_lattice(const Vec& x, const Rational& r, std::size_t per_axis);

struct FrechetResult {
  ConeGen cone;
  std::size_t samples = 0;       // lattice points visited
  std::size_t contributing = 0;  // (y, t) pairs with f_t(y) <= eps and a nonzero gradient
  std::size_t skipped = 0;       // (y, t) pairs where the member is not differentiable
};

/// Cone generated by the gradients of f_t at lattice points y of B(x, eps) with f_t(y) <= eps.
FrechetResult frechet_outer_cone(const SublevelOracleQC& qc, const Vec& x, const Rational& eps,
                                 std::size_t per_axis = 9);

using WitnessTarget = std::variant<QCMember, PolyhedralFunction>;

struct SubgradientWitness {
  Vec y;
  Rational lambda;
  Vec u;
  Vec p;  // g = lambda u + p
};

struct WitnessEntry {
  bool is_ray = false;
  Vec generator;
  std::optional<SubgradientWitness> witness;
};

struct WitnessReport {
  Rational sqrt_eps;
  std::vector<WitnessEntry> entries;
  std::size_t not_found = 0;
};

/// For every generator g of N^eps_{[f <= 0]}(x), searches lattice points y of
/// B(x, 3 sqrt(eps)) with f(y) <= 2 sqrt(eps) and subgradients u at y such that
/// g = lambda u + p, lambda >= 0, |p|_inf <= sqrt(eps) (rays need p = 0).
/// Throws InputError unless eps is the square of a rational.
WitnessReport subgradient_witness_search(const WitnessTarget& f, const Vec& x, const Rational& eps,
                                    std::size_t per_axis = 7);

}  // namespace snc
