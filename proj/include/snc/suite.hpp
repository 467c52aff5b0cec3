#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "snc/optimality.hpp"

namespace snc {

/// Seeded source of small integers and rationals.
///
/// Bounded draws use plain modulo reduction of mt19937_64 output, so the
/// sequence is identical on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  /// true with probability num/den.
  bool chance(long num, long den) { return integer(0, den - 1) < num; }
  /// k / den with k in [lo * den, hi * den].
  Rational rational(long lo, long hi, long den);
  Vec integer_vec(std::size_t n, long lo, long hi);
  /// Integer vector with entries in [lo, hi], not all zero.
  Vec nonzero_vec(std::size_t n, long lo, long hi);
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// Generators draw the dimension and the member count themselves when `dim` or
/// `count` is 0. A fixed count suppresses the optional improper member.

/// All-affine family, 2 <= n <= 4, 1..8 members, boundary or interior query point,
/// an improper member one time in five. Exact-affine mode.
FormulaInstance gen_affine_instance(Rng& rng, const std::string& id, std::size_t dim = 0, std::size_t count = 0);

/// Max-affine members, 2 <= n <= 3; sampled mode on the default grid.
FormulaInstance gen_max_affine_instance(Rng& rng, const std::string& id, std::size_t dim = 0, std::size_t count = 0);

/// Members with restricted domains and at least one improper member; dom target.
FormulaInstance gen_dom_instance(Rng& rng, const std::string& id, std::size_t dim = 0);

/// Members of every quasi-convex kind around a feasible query point; qc target.
FormulaInstance gen_qc_instance(Rng& rng, const std::string& id, std::size_t dim = 0, std::size_t count = 0);

/// Polyhedral program with a box, extra affine or max-affine constraints and a
/// max-affine objective; the candidate is optimal about half of the time.
struct ProgramCase {
  std::string id;
  ProgramInstance program;
  FormulaMode mode = FormulaMode::ExactAffine;
};
ProgramCase gen_program(Rng& rng, const std::string& id, std::size_t dim = 0);

/// Hand-built max-affine instances on the default grid.
std::vector<FormulaInstance> curated_max_affine();

struct SmoothQcCase {
  std::string id;
  SublevelOracleQC qc;
  Vec x;
};
/// Families of smooth quasi-convex members with polyhedral zero sublevels.
std::vector<SmoothQcCase> curated_smooth_qc();

struct ClosureCase {
  std::string id;
  QuasiConvex1D f;
};
/// One-dimensional quasi-convex functions, lsc and not, for the closure identity.
std::vector<ClosureCase> curated_closure_cases();

/// Unit circle constraints <a(u), y> <= 1 with c = -e1 and x = (1, 0).
LinearSIPInstance circle_tangent_instance();
/// Same circle, tangent at (4/5, 3/5), a point no dyadic u-grid hits.
LinearSIPInstance circle_offgrid_instance();

}  // namespace snc
