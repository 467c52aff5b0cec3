#pragma once

#include <variant>
#include <vector>

#include "snc/geometry.hpp"

namespace snc {

/// x -> <slope, x> + intercept
struct AffinePiece {
  Vec slope;
  Rational intercept = 0;

  Rational operator()(const Vec& x) const { return dot(slope, x) + intercept; }
};

/// max of affine pieces on a polyhedral domain, +inf off the domain. Always lsc.
struct PolyhedralFunction {
  std::vector<AffinePiece> pieces;
  PolyhedronH domain;

  PolyhedralFunction() = default;
  PolyhedralFunction(std::vector<AffinePiece> ps, PolyhedronH dom);

  static PolyhedralFunction affine(Vec slope, Rational intercept);
  static PolyhedralFunction max_affine(std::vector<AffinePiece> ps);
  /// I_D: the single zero piece on domain D.
  static PolyhedralFunction indicator(const PolyhedronH& D);

  std::size_t dim() const { return domain.dim; }
  ExtendedValue evaluate(const Vec& x) const;
  bool is_proper() const { return !is_empty(domain); }
  bool is_affine_full_domain() const;
  /// s * f for s > 0.
  PolyhedralFunction scaled(const Rational& s) const;
  /// epi f as a polyhedron in R^{n+1}, last coordinate the value.
  PolyhedronH epigraph() const;
};

/// -inf on a nonempty polyhedral domain, +inf elsewhere.
struct ImproperFunction {
  PolyhedronH domain;
  std::size_t dim() const { return domain.dim; }
};

using ExtendedFunction = std::variant<PolyhedralFunction, ImproperFunction>;

ExtendedValue evaluate(const ExtendedFunction& f, const Vec& x);
std::size_t dim_of(const ExtendedFunction& f);
const PolyhedronH& domain_of(const ExtendedFunction& f);
bool is_proper(const ExtendedFunction& f);

/// [f <= c]: the domain plus <a_i, x> + b_i <= c for every piece.
PolyhedronH sublevel_set(const PolyhedralFunction& f, const Rational& c);

/// cl([f <= 0]) = [cl f <= 0] for a polyhedral function: f is lsc, so this always
/// holds. Throws PreconditionError when [f <= 0] is empty.
bool sublevel_closure_identity(const PolyhedralFunction& f);

/// Exact epsilon-subdifferential of f at x (empty when f(x) is not finite).
GeneratorSet eps_subdifferential(const PolyhedralFunction& f, const Vec& x, const Rational& eps);

/// Repeated epsilon-subdifferential queries at a fixed point share one V-description of epi f.
class SubdifferentialAt {
 public:
  SubdifferentialAt(const PolyhedralFunction& f, Vec x);
  /// H-description of the eps-subdifferential (in the dual variable).
  PolyhedronH h_description(const Rational& eps) const;
  GeneratorSet at(const Rational& eps) const;
  const ExtendedValue& value() const { return fx_; }

 private:
  std::size_t dim_;
  Vec x_;
  ExtendedValue fx_;
  GeneratorSet epi_;
};

/// N^eps_D(x) = {x* : <x*, y - x> <= eps for all y in D}; empty when x is not in D.
GeneratorSet eps_normal_set(const PolyhedronH& D, const Vec& x, const Rational& eps);

}  // namespace snc
