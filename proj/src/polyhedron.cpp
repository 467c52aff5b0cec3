#include "snc/polyhedron.hpp"

#include <algorithm>

namespace snc {

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

namespace {

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

PolyhedronH::PolyhedronH(std::size_t n, std::vector<HalfSpace> cs) : dim(n), constraints(std::move(cs)) {
  for (const auto& h : constraints) require_dim(h.normal, dim, "half-space normal");
}

PolyhedronH PolyhedronH::empty_set(std::size_t n) {
  PolyhedronH p(n);
  p.add(zeros(n), Rational(-1));
  return p;
}

void PolyhedronH::add(Vec normal, Rational offset) {
  require_dim(normal, dim, "half-space normal");
  constraints.push_back(HalfSpace{std::move(normal), std::move(offset)});
}

bool PolyhedronH::contains(const Vec& y) const {
  require_dim(y, dim, "point");
  return std::all_of(constraints.begin(), constraints.end(), [&](const HalfSpace& h) { return h.contains(y); });
}

PolyhedronH PolyhedronH::intersect(const PolyhedronH& other) const {
  if (other.dim != dim) throw InputError("dimension mismatch in polyhedron intersection");
  PolyhedronH r = *this;
  r.constraints.insert(r.constraints.end(), other.constraints.begin(), other.constraints.end());
  return r;
}

PolyhedronH PolyhedronH::translate(const Vec& v) const {
  require_dim(v, dim, "translation");
  PolyhedronH r(dim);
  for (const auto& h : constraints) r.add(h.normal, h.offset + dot(h.normal, v));
  return r;
}

GeneratorSet::GeneratorSet(std::size_t n, std::vector<Vec> pts, std::vector<Vec> rs)
    : dim(n), points(std::move(pts)), rays(std::move(rs)) {
  for (const auto& p : points) require_dim(p, dim, "generator point");
  for (const auto& r : rays) require_dim(r, dim, "generator ray");
}

GeneratorSet& GeneratorSet::normalize() {
  if (points.empty()) {
    rays.clear();
    return *this;
  }
  std::vector<Vec> rs;
  for (const auto& r : rays) {
    if (!is_zero(r)) rs.push_back(primitive(r));
  }
  rays = std::move(rs);
  sort_unique(rays);
  sort_unique(points);
  return *this;
}

GeneratorSet GeneratorSet::scaled(const Rational& s) const {
  GeneratorSet g(dim);
  for (const auto& p : points) g.points.push_back(scale(s, p));
  g.rays = rays;
  if (sgn(s) == 0) g.rays.clear();
  return g;
}

ConeGen::ConeGen(std::size_t n, std::vector<Vec> rs) : dim(n), rays(std::move(rs)) {
  for (const auto& r : rays) require_dim(r, dim, "cone ray");
}

std::string ConeGen::to_string() const {
  std::string s = "cone{";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) s += ", ";
    s += snc::to_string(rays[i]);
  }
  return s + "}";
}

}  // namespace snc
