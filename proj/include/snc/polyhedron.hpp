#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snc/vec.hpp"

namespace snc {

/// {y : <normal, y> <= offset}
struct HalfSpace {
  Vec normal;
  Rational offset = 0;

  bool contains(const Vec& y) const { return dot(normal, y) <= offset; }
  bool tight_at(const Vec& y) const { return dot(normal, y) == offset; }
  /// normal = 0 and offset < 0.
  bool is_empty_constraint() const { return is_zero(normal) && sgn(offset) < 0; }
  /// normal = 0 and offset >= 0.
  bool is_vacuous() const { return is_zero(normal) && sgn(offset) >= 0; }
};

/// H-representation: intersection of finitely many closed half-spaces.
struct PolyhedronH {
  std::size_t dim = 0;
  std::vector<HalfSpace> constraints;

  PolyhedronH() = default;
  explicit PolyhedronH(std::size_t n) : dim(n) {}
  PolyhedronH(std::size_t n, std::vector<HalfSpace> cs);

  static PolyhedronH whole_space(std::size_t n) { return PolyhedronH(n); }
  static PolyhedronH empty_set(std::size_t n);

  void add(Vec normal, Rational offset);
  bool contains(const Vec& y) const;
  /// Intersection with another polyhedron of the same dimension.
  PolyhedronH intersect(const PolyhedronH& other) const;
  /// Set translated by v.
  PolyhedronH translate(const Vec& v) const;
};

/// V-representation co(points) + cone(rays). No points means the empty set.
struct GeneratorSet {
  std::size_t dim = 0;
  std::vector<Vec> points;
  std::vector<Vec> rays;

  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t n) : dim(n) {}
  GeneratorSet(std::size_t n, std::vector<Vec> pts, std::vector<Vec> rs);

  bool empty() const { return points.empty(); }
  /// Drops zero rays and makes the rest primitive, then sorts and deduplicates.
  /// Clears rays when there are no points.
  GeneratorSet& normalize();
  GeneratorSet scaled(const Rational& s) const;
};

/// cone(rays) u {0}, a closed convex cone.
struct ConeGen {
  std::size_t dim = 0;
  std::vector<Vec> rays;

  ConeGen() = default;
  explicit ConeGen(std::size_t n) : dim(n) {}
  ConeGen(std::size_t n, std::vector<Vec> rs);

  bool is_trivial() const { return rays.empty(); }
  std::string to_string() const;
};

bool lex_less(const Vec& a, const Vec& b);

}  // namespace snc
