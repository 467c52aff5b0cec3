#include "snc/oracle.hpp"

namespace snc {

ConeGen polyhedron_normal_cone(const PolyhedronH& P, const Vec& x) {
  require_dim(x, P.dim, "point");
  if (!P.contains(x)) throw PreconditionError("point " + to_string(x) + " is not in the polyhedron");
  ConeGen C(P.dim);
  for (const auto& h : P.constraints) {
    if (!is_zero(h.normal) && h.tight_at(x)) C.rays.push_back(h.normal);
  }
  return canonicalize(C);
}

PolyhedronH sup_sublevel_polyhedron(const SupFamily& family, const Rational& c) {
  PolyhedronH P(family.dim());
  for (const auto& m : family.members()) {
    if (const auto* f = std::get_if<PolyhedralFunction>(&m.fn)) P = P.intersect(sublevel_set(*f, c));
    else P = P.intersect(std::get<ImproperFunction>(m.fn).domain);
  }
  return P;
}

PolyhedronH dom_polyhedron(const SupFamily& family) {
  PolyhedronH P(family.dim());
  for (const auto& m : family.members()) P = P.intersect(domain_of(m.fn));
  return P;
}

PolyhedronH qc_sublevel_polyhedron(const SublevelOracleQC& qc) {
  PolyhedronH P(qc.dim());
  for (const auto& m : qc.members()) P = P.intersect(m.zero_closure);
  return P;
}

}  // namespace snc
