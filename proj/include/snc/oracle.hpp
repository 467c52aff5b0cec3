#pragma once

#include "snc/family.hpp"
#include "snc/qc.hpp"

namespace snc {

/// Cone of the normals of the constraints of P tight at x.
/// Throws PreconditionError when x is not in P.
ConeGen polyhedron_normal_cone(const PolyhedronH& P, const Vec& x);

/// [sup_t f_t <= c]: member sublevel sets intersected with improper domains.
PolyhedronH sup_sublevel_polyhedron(const SupFamily& family, const Rational& c);

/// Intersection of all member domains.
PolyhedronH dom_polyhedron(const SupFamily& family);

/// Intersection of the closed zero sublevels cl[f_t <= 0].
PolyhedronH qc_sublevel_polyhedron(const SublevelOracleQC& qc);

}  // namespace snc
