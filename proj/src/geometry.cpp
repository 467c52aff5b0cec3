#include "snc/geometry.hpp"

#include <algorithm>

namespace snc {

namespace {

void tidy_rays(std::vector<Vec>& rays) {
  std::vector<Vec> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    if (!is_zero(r)) out.push_back(primitive(r));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  rays = std::move(out);
}

ConeGen tidy(ConeGen c) {
  tidy_rays(c.rays);
  return c;
}

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

LpResult lp_solve(const Vec& objective, const PolyhedronH& P) {
  require_dim(objective, P.dim, "LP objective");
  LinearProgram lp(P.dim, /*all_free=*/true);
  lp.objective = objective;
  for (const auto& h : P.constraints) lp.add_row(h.normal, LinearProgram::Sense::Le, h.offset);
  return solve(lp);
}

bool is_empty(const PolyhedronH& P) { return !feasible_point(P).has_value(); }

std::optional<Vec> feasible_point(const PolyhedronH& P) {
  for (const auto& h : P.constraints) {
    if (h.is_empty_constraint()) return std::nullopt;
  }
  LpResult r = lp_solve(zeros(P.dim), P);
  if (r.infeasible()) return std::nullopt;
  return r.point;
}

GeneratorSet h_to_v(const PolyhedronH& P, const DDOptions& options) {
  const std::size_t n = P.dim;
  GeneratorSet out(n);
  std::vector<Vec> normals;
  Vec lambda_row = zeros(n + 1);
  lambda_row[n] = -1;
  normals.push_back(std::move(lambda_row));
  for (const auto& h : P.constraints) {
    require_dim(h.normal, n, "half-space normal");
    if (h.is_vacuous()) continue;
    if (h.is_empty_constraint()) return out;
    Vec row = h.normal;
    row.push_back(-h.offset);
    normals.push_back(std::move(row));
  }
  ConeDescription cone = cone_generators(normals, n + 1, options);
  for (const auto& r : cone.rays) {
    Vec y(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (sgn(r[n]) > 0) {
      out.points.push_back(scale(1 / r[n], y));
    } else {
      out.rays.push_back(std::move(y));
    }
  }
  for (const auto& l : cone.lines) {
    Vec y(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
    out.rays.push_back(negate(y));
    out.rays.push_back(std::move(y));
  }
  out.normalize();
  return out;
}

PolyhedronH v_to_h(const GeneratorSet& G, const DDOptions& options) {
  const std::size_t n = G.dim;
  if (G.empty()) return PolyhedronH::empty_set(n);
  std::vector<Vec> normals;
  for (const auto& p : G.points) {
    require_dim(p, n, "generator point");
    Vec row = p;
    row.push_back(Rational(-1));
    normals.push_back(std::move(row));
  }
  for (const auto& r : G.rays) {
    require_dim(r, n, "generator ray");
    Vec row = r;
    row.push_back(Rational(0));
    normals.push_back(std::move(row));
  }
  ConeDescription cone = cone_generators(normals, n + 1, options);
  std::vector<Vec> gens = cone.rays;
  for (const auto& l : cone.lines) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  tidy_rays(gens);
  PolyhedronH out(n);
  for (const auto& g : gens) {
    Vec normal(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(normal)) continue;
    out.add(std::move(normal), g[n]);
  }
  return out;
}

PolyhedronH polar_h(const ConeGen& C) {
  PolyhedronH out(C.dim);
  for (const auto& r : C.rays) out.add(r, Rational(0));
  return out;
}

ConeGen homogeneous_cone(const PolyhedronH& P, const DDOptions& options) {
  std::vector<Vec> normals;
  for (const auto& h : P.constraints) normals.push_back(h.normal);
  ConeDescription d = cone_generators(normals, P.dim, options);
  ConeGen c(P.dim, d.rays);
  for (const auto& l : d.lines) {
    c.rays.push_back(l);
    c.rays.push_back(negate(l));
  }
  return tidy(std::move(c));
}

ConeGen recession_cone(const PolyhedronH& P) {
  if (is_empty(P)) return ConeGen(P.dim);
  return homogeneous_cone(P);
}

ConeGen recession_cone(const GeneratorSet& G) {
  if (G.empty()) return ConeGen(G.dim);
  return canonicalize(ConeGen(G.dim, G.rays));
}

GeneratorSet closed_conv_hull_union(const std::vector<GeneratorSet>& sets) {
  if (sets.empty()) throw InputError("closed_conv_hull_union of no sets");
  GeneratorSet out(sets.front().dim);
  for (const auto& s : sets) {
    check_same_dim(s.dim, out.dim, "closed_conv_hull_union");
    if (s.empty()) continue;
    out.points.insert(out.points.end(), s.points.begin(), s.points.end());
    out.rays.insert(out.rays.end(), s.rays.begin(), s.rays.end());
  }
  out.normalize();
  return out;
}

GeneratorSet minkowski_sum(const GeneratorSet& A, const GeneratorSet& B) {
  check_same_dim(A.dim, B.dim, "minkowski_sum");
  GeneratorSet out(A.dim);
  if (A.empty() || B.empty()) return out;
  for (const auto& a : A.points) {
    for (const auto& b : B.points) out.points.push_back(add(a, b));
  }
  out.rays = A.rays;
  out.rays.insert(out.rays.end(), B.rays.begin(), B.rays.end());
  out.normalize();
  return out;
}

ExtendedValue support_function(const GeneratorSet& A, const Vec& d) {
  require_dim(d, A.dim, "support direction");
  if (A.empty()) return ExtendedValue::neg_inf();
  for (const auto& r : A.rays) {
    if (sgn(dot(d, r)) > 0) return ExtendedValue::pos_inf();
  }
  Rational best = dot(d, A.points.front());
  for (const auto& p : A.points) {
    Rational v = dot(d, p);
    if (v > best) best = v;
  }
  return ExtendedValue(best);
}

std::optional<std::vector<Rational>> cone_membership(const ConeGen& C, const Vec& v) {
  require_dim(v, C.dim, "cone membership vector");
  const std::size_t k = C.rays.size();
  if (k == 0) {
    if (is_zero(v)) return std::vector<Rational>{};
    return std::nullopt;
  }
  LinearProgram lp(k);
  for (std::size_t j = 0; j < C.dim; ++j) {
    Vec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = C.rays[i][j];
    lp.add_row(std::move(row), LinearProgram::Sense::Eq, v[j]);
  }
  LpResult r = solve(lp);
  if (r.infeasible()) return std::nullopt;
  return std::vector<Rational>(r.point.begin(), r.point.end());
}

std::optional<Vec> cone_subset_witness(const ConeGen& inner, const ConeGen& outer) {
  check_same_dim(inner.dim, outer.dim, "cone comparison");
  for (const auto& r : inner.rays) {
    if (!cone_contains(outer, r)) return r;
  }
  return std::nullopt;
}

bool cone_subset(const ConeGen& inner, const ConeGen& outer) {
  return !cone_subset_witness(inner, outer).has_value();
}

bool cone_equal(const ConeGen& a, const ConeGen& b) { return cone_subset(a, b) && cone_subset(b, a); }

ConeGen canonicalize(const ConeGen& C) {
  ConeGen c = tidy(C);
  std::vector<bool> keep(c.rays.size(), true);
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    ConeGen others(c.dim);
    for (std::size_t j = 0; j < c.rays.size(); ++j) {
      if (j != i && keep[j]) others.rays.push_back(c.rays[j]);
    }
    if (cone_contains(others, c.rays[i])) keep[i] = false;
  }
  ConeGen out(c.dim);
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (keep[i]) out.rays.push_back(c.rays[i]);
  }
  return out;
}

ConeGen cone_intersection(const std::vector<ConeGen>& cones) {
  if (cones.empty()) throw InputError("cone_intersection of no cones");
  PolyhedronH h(cones.front().dim);
  for (const auto& c : cones) {
    check_same_dim(c.dim, h.dim, "cone_intersection");
    GeneratorSet g(c.dim, {zeros(c.dim)}, c.rays);
    h = h.intersect(v_to_h(g));
  }
  return canonicalize(homogeneous_cone(h));
}

ConeGen polar_cone(const ConeGen& C) { return canonicalize(homogeneous_cone(polar_h(C))); }

bool generators_in(const GeneratorSet& G, const PolyhedronH& P) {
  check_same_dim(G.dim, P.dim, "containment");
  if (G.empty()) return true;
  for (const auto& p : G.points) {
    if (!P.contains(p)) return false;
  }
  for (const auto& r : G.rays) {
    for (const auto& h : P.constraints) {
      if (sgn(dot(h.normal, r)) > 0) return false;
    }
  }
  return true;
}

bool polyhedron_subset(const PolyhedronH& P, const PolyhedronH& Q) {
  check_same_dim(P.dim, Q.dim, "containment");
  if (is_empty(P)) return true;
  for (const auto& h : Q.constraints) {
    if (h.is_vacuous()) continue;
    LpResult r = lp_solve(h.normal, P);
    if (r.unbounded()) return false;
    if (r.optimal() && r.value > h.offset) return false;
  }
  return true;
}

bool same_set(const PolyhedronH& P, const PolyhedronH& Q) {
  return polyhedron_subset(P, Q) && polyhedron_subset(Q, P);
}

bool same_set(const GeneratorSet& A, const GeneratorSet& B) {
  check_same_dim(A.dim, B.dim, "set comparison");
  if (A.empty() || B.empty()) return A.empty() == B.empty();
  return generators_in(A, v_to_h(B)) && generators_in(B, v_to_h(A));
}

bool gen_contains_point(const GeneratorSet& G, const Vec& y) {
  require_dim(y, G.dim, "point");
  if (G.empty()) return false;
  const std::size_t np = G.points.size();
  const std::size_t nr = G.rays.size();
  LinearProgram lp(np + nr);
  for (std::size_t j = 0; j < G.dim; ++j) {
    Vec row(np + nr);
    for (std::size_t i = 0; i < np; ++i) row[i] = G.points[i][j];
    for (std::size_t i = 0; i < nr; ++i) row[np + i] = G.rays[i][j];
    lp.add_row(std::move(row), LinearProgram::Sense::Eq, y[j]);
  }
  Vec ones = zeros(np + nr);
  for (std::size_t i = 0; i < np; ++i) ones[i] = 1;
  lp.add_row(std::move(ones), LinearProgram::Sense::Eq, Rational(1));
  return !solve(lp).infeasible();
}

}  // namespace snc
