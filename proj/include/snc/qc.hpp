#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snc/polyhedron.hpp"
#include "snc/polynomial.hpp"
#include "snc/quasiconvex1d.hpp"

namespace snc {

/// x -> p(<a, x> + b) with p strictly monotone on R.
///
/// The author declares the direction of p and a rational root r; both are
/// checked exactly, and the zero sublevel is then the half-space on the
/// appropriate side of <a, x> + b = r.
struct SmoothQCMember {
  Vec a;
  Rational b = 0;
  Polynomial p;
  int direction = 1;  // +1 increasing, -1 decreasing
  Rational root = 0;

  /// Throws InputError when a = 0, p is not strictly monotone in the declared
  /// direction, or p(root) != 0.
  void validate() const;
  Rational inner(const Vec& x) const { return dot(a, x) + b; }
  Rational evaluate(const Vec& x) const { return p(inner(x)); }
  Vec gradient(const Vec& x) const { return scale(p.derivative()(inner(x)), a); }
  /// [f <= 0] as a single half-space.
  PolyhedronH zero_sublevel() const;
};

/// One member of a quasi-convex family, together with its zero sublevel set.
struct QCMember {
  enum class Kind {
    Sublevel,   // only [f_t <= 0] is given; evaluator 0 on it, 1 elsewhere
    Composite,  // g(<a, x> + b) with g a QuasiConvex1D
    Smooth,     // SmoothQCMember
  };

  std::string id;
  Kind kind = Kind::Sublevel;

  PolyhedronH zero_closure;            // cl [f_t <= 0]
  std::vector<HalfSpace> strict;       // constraints of zero_closure that hold strictly in [f_t <= 0]
  PolyhedronH hull_zero;               // [cl f_t <= 0]

  std::optional<QuasiConvex1D> g;      // Composite
  Vec a;                               // Composite
  Rational b = 0;                      // Composite
  std::optional<SmoothQCMember> smooth;

  static QCMember sublevel(std::string id, PolyhedronH zero);
  static QCMember composite(std::string id, QuasiConvex1D g, Vec a, Rational b);
  static QCMember from_smooth(std::string id, SmoothQCMember m);

  std::size_t dim() const { return zero_closure.dim; }
  ExtendedValue evaluate(const Vec& x) const;
  /// x in [f_t <= 0], strict constraints included.
  bool in_zero_sublevel(const Vec& x) const;
  /// Continuity of f_t at x, decided exactly from the member form.
  bool continuous_at(const Vec& x) const;
  /// Gradients (or one-sided derivatives times a) usable as subgradient
  /// candidates at x; empty where the member is not differentiable.
  std::vector<Vec> gradients(const Vec& x) const;
};

std::string to_string(QCMember::Kind k);

/// Family of quasi-convex members addressed through their zero sublevel sets.
class SublevelOracleQC {
 public:
  SublevelOracleQC() = default;
  /// Throws InputError on an empty family, duplicate ids, mixed dimensions,
  /// or when a zero sublevel disagrees with its evaluator on the sample lattice.
  SublevelOracleQC(std::size_t dim, std::vector<QCMember> members);

  std::size_t dim() const { return dim_; }
  const std::vector<QCMember>& members() const { return members_; }

  /// sup_t f_t(x).
  ExtendedValue evaluate(const Vec& x) const;
  /// x lies in every [f_t <= 0] and f(x) is finite.
  bool feasible(const Vec& x) const;
  /// Throws PreconditionError unless feasible(x).
  void require_feasible(const Vec& x) const;
  bool all_smooth_or_composite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<QCMember> members_;
};

/// Evidence supplied for the closure condition cl[f <= 0] = cap_t cl[f_t <= 0].
struct ClosureEvidence {
  enum class Kind { None, Check, ContinuityPoint };
  Kind kind = Kind::None;
  std::optional<Vec> point;  // ContinuityPoint only

  static ClosureEvidence none() { return {}; }
  static ClosureEvidence check() { return {Kind::Check, std::nullopt}; }
  static ClosureEvidence continuity(Vec y) { return {Kind::ContinuityPoint, std::move(y)}; }
};

std::string to_string(ClosureEvidence::Kind k);

}  // namespace snc
