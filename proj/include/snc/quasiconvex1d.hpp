#pragma once

#include <optional>
#include <vector>

#include "snc/rational.hpp"

namespace snc {

/// Interval of the real line; a missing bound is infinite (and then open).
struct Interval {
  std::optional<Rational> lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval whole_line() { return Interval{}; }
  static Interval point(const Rational& u) { return Interval{u, u, true, true}; }

  bool empty() const;
  bool contains(const Rational& u) const;
  Interval closure() const;
  friend bool operator==(const Interval& a, const Interval& b) = default;
};

std::string to_string(const Interval& I);

/// Union of intervals merged into maximal disjoint components, sorted left to right.
std::vector<Interval> merge_intervals(std::vector<Interval> parts);

/// u -> slope * u + intercept on one open cell between breakpoints.
struct AffinePiece1D {
  Rational slope = 0;
  Rational intercept = 0;
  Rational operator()(const Rational& u) const { return slope * u + intercept; }
};

/// Piecewise-affine function of one variable that may jump at breakpoints and
/// take +inf on whole cells or at single breakpoints. Every sublevel set is
/// checked to be an interval when the object is created.
class QuasiConvex1D {
 public:
  /// `pieces` has one entry per open cell (breakpoints.size() + 1); nullopt means +inf.
  /// `values` has one entry per breakpoint (finite or +inf).
  /// Throws InputError on malformed data or when some sublevel set is not an interval.
  static QuasiConvex1D create(std::vector<Rational> breakpoints, std::vector<std::optional<AffinePiece1D>> pieces,
                              std::vector<ExtendedValue> values);

  ExtendedValue evaluate(const Rational& u) const;

  /// [f <= c] as merged components (one component or none for a valid function).
  std::vector<Interval> sublevel_components(const Rational& c) const;
  /// [f <= c]; nullopt when empty.
  std::optional<Interval> sublevel(const Rational& c) const;

  /// Lower semicontinuous hull: breakpoint values replaced by min(value, left limit, right limit).
  QuasiConvex1D closed_hull() const;

  bool is_lsc() const;

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<std::optional<AffinePiece1D>>& pieces() const { return pieces_; }
  const std::vector<ExtendedValue>& values() const { return values_; }

  /// Derivative on the open cell containing u; nullopt at breakpoints or on +inf cells.
  std::optional<Rational> derivative(const Rational& u) const;

 private:
  QuasiConvex1D() = default;
  std::vector<ExtendedValue> critical_levels() const;
  ExtendedValue left_limit(std::size_t k) const;
  ExtendedValue right_limit(std::size_t k) const;

  std::vector<Rational> breakpoints_;
  std::vector<std::optional<AffinePiece1D>> pieces_;
  std::vector<ExtendedValue> values_;
};

/// Outcome of comparing cl([f <= 0]) with [cl f <= 0].
struct ClosureVerdict {
  bool holds = true;
  std::optional<Rational> witness;  // point in exactly one of the two sets
  Interval closure_of_sublevel;
  Interval sublevel_of_hull;
};

/// Throws PreconditionError when [f <= 0] is empty.
ClosureVerdict sublevel_closure_identity(const QuasiConvex1D& f);

/// Lsc hull (breakpoint values lowered to the adjacent limits).
inline QuasiConvex1D qc1d_closed_hull(const QuasiConvex1D& f) { return f.closed_hull(); }

}  // namespace snc
