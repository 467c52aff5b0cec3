#pragma once

#include <optional>
#include <vector>

#include "snc/double_description.hpp"
#include "snc/lp.hpp"
#include "snc/polyhedron.hpp"

namespace snc {

// ---- linear programming over polyhedra -------------------------------------

/// max <objective, y> over P.
LpResult lp_solve(const Vec& objective, const PolyhedronH& P);

bool is_empty(const PolyhedronH& P);

/// A point of P, if any.
std::optional<Vec> feasible_point(const PolyhedronH& P);

// ---- representation conversions --------------------------------------------

/// Exact V-representation. Empty P gives an empty GeneratorSet.
GeneratorSet h_to_v(const PolyhedronH& P, const DDOptions& options = {});

/// Exact H-representation of co(points) + cone(rays); the empty set maps to {0 <= -1}.
PolyhedronH v_to_h(const GeneratorSet& G, const DDOptions& options = {});

/// {y : <r, y> <= 0 for every generator r}: the H-description of the polar cone.
PolyhedronH polar_h(const ConeGen& C);

/// Cone generated by the rays of {y : <normal_i, y> <= 0}. Offsets are ignored.
ConeGen homogeneous_cone(const PolyhedronH& P, const DDOptions& options = {});

// ---- set operations -------------------------------------------------------

/// [P]_inf; the empty polyhedron has recession cone {0}.
ConeGen recession_cone(const PolyhedronH& P);

/// Recession cone of a V-represented set: cone(rays), {0} when empty.
ConeGen recession_cone(const GeneratorSet& G);

/// Closed convex hull of a finite union of polyhedra. Empty members are dropped.
GeneratorSet closed_conv_hull_union(const std::vector<GeneratorSet>& sets);

/// A + B with A + {} = {} + A = {}.
GeneratorSet minkowski_sum(const GeneratorSet& A, const GeneratorSet& B);

/// Support function sigma_A(d); -inf on the empty set.
ExtendedValue support_function(const GeneratorSet& A, const Vec& d);

// ---- cones ------------------------------------------------------------------

/// Multipliers mu >= 0 with v = sum mu_i rays_i when v is in the cone.
std::optional<std::vector<Rational>> cone_membership(const ConeGen& C, const Vec& v);

inline bool cone_contains(const ConeGen& C, const Vec& v) { return cone_membership(C, v).has_value(); }

/// Every generator of `inner` lies in `outer`.
bool cone_subset(const ConeGen& inner, const ConeGen& outer);

bool cone_equal(const ConeGen& a, const ConeGen& b);

/// First generator of `inner` not contained in `outer`.
std::optional<Vec> cone_subset_witness(const ConeGen& inner, const ConeGen& outer);

/// Primitive integer rays in lexicographic order, without duplicates or redundant rays.
ConeGen canonicalize(const ConeGen& C);

/// Intersection of finitely many cones (through H-descriptions).
ConeGen cone_intersection(const std::vector<ConeGen>& cones);

/// Polar cone {d : <d, k> <= 0 for all k in C}.
ConeGen polar_cone(const ConeGen& C);

// ---- containment -------------------------------------------------------------

/// Generated set is contained in P.
bool generators_in(const GeneratorSet& G, const PolyhedronH& P);

/// P is contained in Q (decided by one LP per constraint of Q).
bool polyhedron_subset(const PolyhedronH& P, const PolyhedronH& Q);

bool same_set(const PolyhedronH& P, const PolyhedronH& Q);
bool same_set(const GeneratorSet& A, const GeneratorSet& B);

/// Convex hull membership of a point in a V-represented set (LP).
bool gen_contains_point(const GeneratorSet& G, const Vec& y);

}  // namespace snc
