#include <doctest.h>

#include <random>

#include "snc/geometry.hpp"

using namespace snc;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

PolyhedronH unit_square() {
  PolyhedronH p(2);
  p.add(make_vec({1, 0}), q(1));
  p.add(make_vec({-1, 0}), q(0));
  p.add(make_vec({0, 1}), q(1));
  p.add(make_vec({0, -1}), q(0));
  return p;
}

ConeGen cone(std::initializer_list<Vec> rays) {
  std::vector<Vec> rs(rays);
  return ConeGen(rs.front().size(), rs);
}

PolyhedronH random_polyhedron(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  PolyhedronH p(n);
  for (std::size_t i = 0; i < m; ++i) {
    Vec a(n);
    for (auto& c : a) c = static_cast<long>(rng() % 7) - 3;
    p.add(a, q(static_cast<long>(rng() % 5) - 1));
  }
  return p;
}

}  // namespace

TEST_CASE("lp_solve small programs") {
  LpResult r = lp_solve(make_vec({1, 0}), unit_square());
  REQUIRE(r.optimal());
  CHECK(r.value == 1);
  CHECK(r.point[0] == 1);

  PolyhedronH p(2);
  p.add(make_vec({1, 0}), q(0));
  p.add(make_vec({-1, 0}), q(0));
  p.add(make_vec({0, 1}), q(0));
  r = lp_solve(make_vec({1, 0}), p);
  REQUIRE(r.optimal());
  CHECK(r.value == 0);

  PolyhedronH infeasible(1);
  infeasible.add(make_vec({-1}), q(-1));
  infeasible.add(make_vec({1}), q(0));
  CHECK(lp_solve(make_vec({1}), infeasible).infeasible());

  PolyhedronH orthant(2);
  orthant.add(make_vec({1, 0}), q(0));
  orthant.add(make_vec({0, 1}), q(0));
  r = lp_solve(make_vec({-1, -1}), orthant);
  REQUIRE(r.unbounded());
  CHECK(dot(make_vec({-1, -1}), r.ray) > 0);
  CHECK(orthant.contains(add(r.point, r.ray)));

  CHECK_THROWS_AS(lp_solve(make_vec({1, 0, 0}), unit_square()), InputError);
}

TEST_CASE("h_to_v examples") {
  GeneratorSet g = h_to_v(unit_square());
  CHECK(g.points.size() == 4);
  CHECK(g.rays.empty());

  PolyhedronH quad(2);
  quad.add(make_vec({1, 0}), q(0));
  quad.add(make_vec({0, 1}), q(0));
  g = h_to_v(quad);
  REQUIRE(g.points.size() == 1);
  CHECK(is_zero(g.points[0]));
  CHECK(g.rays == std::vector<Vec>{make_vec({-1, 0}), make_vec({0, -1})});
  CHECK(same_set(v_to_h(g), quad));

  PolyhedronH empty(1);
  empty.add(make_vec({-1}), q(0));
  empty.add(make_vec({1}), q(-1));
  CHECK(h_to_v(empty).empty());

  // Degenerate constraints: vacuous dropped, impossible one empties the set.
  PolyhedronH vac = unit_square();
  vac.add(make_vec({0, 0}), q(3));
  CHECK(h_to_v(vac).points.size() == 4);
  vac.add(make_vec({0, 0}), q(-1));
  CHECK(h_to_v(vac).empty());

  // The whole line has a point and two opposite rays.
  GeneratorSet line = h_to_v(PolyhedronH::whole_space(1));
  CHECK(line.points.size() == 1);
  CHECK(line.rays.size() == 2);
}

TEST_CASE("v_to_h examples") {
  GeneratorSet tri(2, {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})}, {});
  PolyhedronH h = v_to_h(tri);
  CHECK(h.constraints.size() == 3);
  CHECK(same_set(h_to_v(h), tri));

  GeneratorSet ray(2, {make_vec({0, 0})}, {make_vec({1, 0})});
  h = v_to_h(ray);
  CHECK(h.constraints.size() == 3);
  PolyhedronH expected(2);
  expected.add(make_vec({0, 1}), q(0));
  expected.add(make_vec({0, -1}), q(0));
  expected.add(make_vec({-1, 0}), q(0));
  CHECK(same_set(h, expected));

  CHECK(is_empty(v_to_h(GeneratorSet(2))));
}

TEST_CASE("recession cones") {
  CHECK(recession_cone(unit_square()).is_trivial());
  PolyhedronH quad(2);
  quad.add(make_vec({1, 0}), q(0));
  quad.add(make_vec({0, 1}), q(0));
  CHECK(cone_equal(recession_cone(quad), cone({make_vec({-1, 0}), make_vec({0, -1})})));
  CHECK(recession_cone(PolyhedronH::empty_set(3)).is_trivial());
}

TEST_CASE("hull of unions and Minkowski sums") {
  GeneratorSet s1(2, {make_vec({0, 0}), make_vec({1, 0})}, {});
  GeneratorSet s2(2, {make_vec({0, 0}), make_vec({0, 1})}, {});
  GeneratorSet tri(2, {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})}, {});
  CHECK(same_set(closed_conv_hull_union({s1, s2}), tri));

  GeneratorSet r1(2, {make_vec({0, 0})}, {make_vec({1, 0})});
  GeneratorSet r2(2, {make_vec({0, 0})}, {make_vec({0, 1})});
  PolyhedronH orthant(2);
  orthant.add(make_vec({-1, 0}), q(0));
  orthant.add(make_vec({0, -1}), q(0));
  CHECK(same_set(v_to_h(closed_conv_hull_union({r1, r2})), orthant));

  GeneratorSet p(2, {make_vec({1, 0})}, {});
  GeneratorSet pr(2, {make_vec({0, 1})}, {make_vec({1, 0})});
  GeneratorSet hull = closed_conv_hull_union({p, pr, GeneratorSet(2)});
  CHECK(hull.points == std::vector<Vec>{make_vec({0, 1}), make_vec({1, 0})});
  CHECK(hull.rays == std::vector<Vec>{make_vec({1, 0})});
  // Direct DD on the H-description of the hull.
  CHECK(same_set(h_to_v(v_to_h(hull)), hull));
  CHECK(closed_conv_hull_union({GeneratorSet(2)}).empty());

  GeneratorSet square = h_to_v(unit_square());
  GeneratorSet origin(2, {make_vec({0, 0})}, {});
  CHECK(same_set(minkowski_sum(square, origin), square));
  CHECK(minkowski_sum(square, GeneratorSet(2)).empty());
  CHECK(minkowski_sum(GeneratorSet(2), square).empty());
  CHECK(same_set(minkowski_sum(s1, s2), square));
  CHECK(h_to_v(v_to_h(minkowski_sum(s1, s2))).points.size() == 4);
}

TEST_CASE("cone membership and equality") {
  ConeGen c = cone({make_vec({1, 0}), make_vec({0, 1})});
  auto w = cone_membership(c, make_vec({1, 1}));
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 1);
  CHECK((*w)[1] == 1);
  CHECK_FALSE(cone_contains(c, make_vec({-1, 0})));

  ConeGen d = cone({make_vec({1, 1}), make_vec({1, -1})});
  w = cone_membership(d, make_vec({2, 0}));
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 1);
  CHECK((*w)[1] == 1);

  CHECK(cone_equal(c, cone({make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})})));
  CHECK_FALSE(cone_equal(cone({make_vec({1, 0})}), c));
  CHECK(cone_equal(cone({make_vec({2, 0})}), cone({make_vec({1, 0})})));

  ConeGen canon = canonicalize(cone({make_vec({2, 2}), make_vec({0, 3}), make_vec({4, 0})}));
  CHECK(canon.rays == std::vector<Vec>{make_vec({0, 1}), make_vec({1, 0})});
  CHECK(cone_contains(ConeGen(2), make_vec({0, 0})));
}

TEST_CASE("support function") {
  GeneratorSet square = h_to_v(unit_square());
  CHECK(support_function(square, make_vec({1, 1})) == ExtendedValue(q(2)));
  GeneratorSet r(2, {make_vec({0, 0})}, {make_vec({1, 0})});
  CHECK(support_function(r, make_vec({1, 0})).is_pos_inf());
  CHECK(support_function(GeneratorSet(2), make_vec({1, 0})).is_neg_inf());
}

TEST_CASE("random round trips, translation invariance and determinism") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + iter % 2;
    PolyhedronH p = random_polyhedron(rng, n, 3 + iter % 4);
    GeneratorSet g = h_to_v(p);
    PolyhedronH back = v_to_h(g);
    CHECK(same_set(back, p));
    CHECK(generators_in(g, p));
    CHECK(h_to_v(p).points == g.points);
    CHECK(h_to_v(p).rays == g.rays);
    Vec shift(n);
    for (auto& c : shift) c = make_rational(static_cast<long>(rng() % 9) - 4, 3);
    CHECK(cone_equal(recession_cone(p), recession_cone(p.translate(shift))));
  }
}

TEST_CASE("generator cap is reported") {
  DDOptions tiny;
  tiny.max_generators = 2;
  PolyhedronH cube(3);
  for (std::size_t i = 0; i < 3; ++i) {
    cube.add(unit(3, i), q(1));
    cube.add(negate(unit(3, i)), q(0));
  }
  CHECK_THROWS_AS(h_to_v(cube, tiny), SizingError);
  CHECK(h_to_v(cube).points.size() == 8);
}
