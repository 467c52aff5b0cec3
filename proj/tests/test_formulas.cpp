#include <doctest.h>

#include <random>

#include "snc/formulas.hpp"
#include "snc/oracle.hpp"

using namespace snc;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

FamilyMember affine(const std::string& id, std::initializer_list<long> a, long b) {
  return {id, PolyhedralFunction::affine(make_vec(a), q(b))};
}

PolyhedronH half(std::initializer_list<long> normal, long offset) {
  Vec n = make_vec(normal);
  PolyhedronH h(n.size());
  h.add(n, q(offset));
  return h;
}

ConeGen cone(std::size_t n, std::vector<Vec> rays) { return canonicalize(ConeGen(n, std::move(rays))); }

ConeGen oracle_cone(const SupFamily& fam, const Vec& x) {
  return polyhedron_normal_cone(sup_sublevel_polyhedron(fam, q(0)), x);
}

using P1 = std::optional<AffinePiece1D>;

SmoothQCMember cubic(Vec a, Rational b) {
  // p(u) = u^3, increasing, root 0
  return SmoothQCMember{std::move(a), std::move(b), Polynomial({q(0), q(0), q(0), q(1)}), 1, q(0)};
}

// max-affine function with random pieces through or below the origin.
SupFamily random_max_affine_family(std::mt19937_64& rng, std::size_t n) {
  auto rnd = [&](long lo, long hi) { return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo; };
  std::vector<FamilyMember> members;
  const int m = 1 + static_cast<int>(rnd(0, 2));
  for (int t = 0; t < m; ++t) {
    std::vector<AffinePiece> pieces;
    const int k = 1 + static_cast<int>(rnd(0, 2));
    for (int i = 0; i < k; ++i) {
      Vec a(n);
      for (auto& c : a) c = rnd(-3, 3);
      pieces.push_back({a, q(-rnd(0, 2))});
    }
    PolyhedronH dom = PolyhedronH::whole_space(n);
    if (rnd(0, 3) == 0) {
      Vec d(n);
      for (auto& c : d) c = rnd(-2, 2);
      dom.add(d, q(rnd(0, 1)));
    }
    members.push_back({"f" + std::to_string(t), PolyhedralFunction(pieces, dom)});
  }
  return SupFamily(n, members);
}

}  // namespace

TEST_CASE("polynomial monotonicity") {
  CHECK(monotonicity(Polynomial({q(0), q(0), q(0), q(1)})) == 1);     // u^3
  CHECK(monotonicity(Polynomial({q(0), q(-1), q(0), q(1)})) == 0);    // u^3 - u
  CHECK(monotonicity(Polynomial({q(0), q(-1), q(0), q(-1)})) == -1);  // -u^3 - u
  CHECK(monotonicity(Polynomial({q(0), q(0), q(0), q(1), q(0), q(1)})) == 1);  // u^5 + u^3
  CHECK(monotonicity(Polynomial({q(0), q(0), q(1)})) == 0);                    // u^2
  CHECK(monotonicity(Polynomial({q(5)})) == 0);
  CHECK(count_real_roots(Polynomial({q(-2), q(0), q(1)})) == 2);  // u^2 - 2
  CHECK(count_real_roots(Polynomial({q(1), q(0), q(1)})) == 0);
  // (u-1)^2 (u+2)
  Polynomial p = Polynomial({q(-1), q(1)}) * Polynomial({q(-1), q(1)}) * Polynomial({q(2), q(1)});
  auto f = squarefree_decomposition(p);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == Polynomial({q(2), q(1)}));
  CHECK(f[1] == Polynomial({q(-1), q(1)}));
  CHECK(count_real_roots(p) == 2);
}

TEST_CASE("smooth member validation") {
  CHECK_NOTHROW(cubic(make_vec({1}), q(0)).validate());
  SmoothQCMember wrong_root = cubic(make_vec({1}), q(0));
  wrong_root.root = 1;
  CHECK_THROWS_AS(wrong_root.validate(), InputError);
  SmoothQCMember wrong_dir = cubic(make_vec({1}), q(0));
  wrong_dir.direction = -1;
  CHECK_THROWS_AS(wrong_dir.validate(), InputError);
  SmoothQCMember bump{make_vec({1}), q(0), Polynomial({q(0), q(-1), q(0), q(1)}), 1, q(0)};
  CHECK_THROWS_AS(bump.validate(), InputError);
  // decreasing: p(u) = 1 - u, root 1, zero sublevel u >= 1
  SmoothQCMember dec{make_vec({1, 1}), q(0), Polynomial({q(1), q(-1)}), -1, q(1)};
  CHECK(same_set(dec.zero_sublevel(), half({-1, -1}, -1)));
}

TEST_CASE("active index set") {
  SupFamily fam(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, -1)});
  CHECK(active_index_set(fam, make_vec({0, 0}), q(1, 2), q(1)) == std::vector<std::string>{"1"});
  CHECK(active_index_set(fam, make_vec({0, 0}), q(1, 2), q(1, 4)) == std::vector<std::string>{"1", "2"});
  SupFamily zero(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, 0)});
  for (auto s : {q(1, 1024), q(1), q(1024)}) CHECK(active_index_set(zero, make_vec({0, 0}), q(1), s).size() == 2);
  CHECK_THROWS_AS(active_index_set(fam, make_vec({1, 0}), q(1), q(1)), PreconditionError);
}

TEST_CASE("domain normal cone") {
  Vec x = make_vec({0, 0});
  SupFamily a(2, {affine("1", {1, 0}, 0), {"2", ImproperFunction{half({0, 1}, 0)}}});
  CHECK(cone_equal(dom_sup_normal_cone(a, x, q(1)).cone, cone(2, {make_vec({0, 1})})));
  CHECK(cone_equal(dom_sup_normal_cone(a, x, q(1)).cone, polyhedron_normal_cone(dom_polyhedron(a), x)));

  SupFamily b(2, {affine("1", {1, 2}, 3)});
  CHECK(dom_sup_normal_cone(b, x, q(1)).cone.is_trivial());

  SupFamily c(2, {{"1", PolyhedralFunction({AffinePiece{make_vec({1, 1}), q(0)}}, half({1, 0}, 0))},
                  {"2", PolyhedralFunction({AffinePiece{make_vec({0, 0}), q(-5)}}, half({0, 1}, 0))}});
  ConeGen expected = cone(2, {make_vec({1, 0}), make_vec({0, 1})});
  DomConeResult r = dom_sup_normal_cone(c, x, q(1));
  CHECK(cone_equal(r.cone, expected));
  // member 2 is far from active: rho = -1 / (2(-5) - 0 + 1) = 1/9
  REQUIRE(r.weights.size() == 2);
  CHECK(r.weights[1].second == q(1, 9));
  CHECK(cone_equal(dom_sup_normal_cone(c, x, q(1), AlphaPolicy::all_ones()).cone, expected));
  CHECK_THROWS_AS(dom_sup_normal_cone(c, x, q(1), AlphaPolicy::explicit_weights({{"1", q(1)}, {"2", q(1, 10)}})),
                  InputError);
  CHECK(cone_equal(
      dom_sup_normal_cone(c, x, q(1), AlphaPolicy::explicit_weights({{"1", q(2)}, {"2", q(1, 9)}})).cone, expected));
}

TEST_CASE("sublevel normal cone formula examples") {
  Vec x = make_vec({0, 0});
  SupFamily orth(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, 0)});
  ConeGen quadrant = cone(2, {make_vec({1, 0}), make_vec({0, 1})});
  for (auto eps : {q(1), q(1, 3), q(7)}) {
    FormulaResult r = sublevel_normal_cone_formula(orth, x, eps, default_grid(), FormulaMode::ExactAffine);
    CHECK(cone_equal(r.cone, quadrant));
    CHECK(r.exactness == Exactness::Exact);
    FormulaResult s = sublevel_normal_cone_formula(orth, x, eps, default_grid(), FormulaMode::Sampled);
    CHECK(cone_equal(s.cone, quadrant));
    CHECK(s.exactness == Exactness::Exact);
  }

  PolyhedralFunction clipped = PolyhedralFunction::max_affine({{make_vec({1}), q(0)}, {make_vec({0}), q(-1)}});
  FormulaResult inner = singleton_sublevel_normal_cone(clipped, make_vec({-2}), q(1, 2), default_grid());
  CHECK(inner.cone.is_trivial());
  CHECK(inner.exactness == Exactness::Exact);

  SupFamily mixed(2, {affine("1", {1, 0}, 0), {"2", ImproperFunction{half({0, 1}, 0)}}});
  FormulaResult m = sublevel_normal_cone_formula(mixed, x, q(1), default_grid(), FormulaMode::ExactAffine);
  CHECK(cone_equal(m.cone, quadrant));
  CHECK(std::any_of(m.log.begin(), m.log.end(), [](const BranchEntry& e) { return e.branch == "B"; }));

  SupFamily nonaffine(1, {{"f", clipped}});
  CHECK_THROWS_AS(sublevel_normal_cone_formula(nonaffine, make_vec({-2}), q(1), default_grid(), FormulaMode::ExactAffine),
                  InputError);
  CHECK_THROWS_AS(sublevel_normal_cone_formula(orth, make_vec({1, 0}), q(1), default_grid(), FormulaMode::ExactAffine),
                  PreconditionError);
}

TEST_CASE("coarse grid stays strictly inside, default grid certifies") {
  // f = max(x1, x2) at the origin; the coarse grid has no tail.
  SupFamily fam(2, {{"f", PolyhedralFunction::max_affine({{make_vec({1, 0}), q(0)}, {make_vec({0, 1}), q(0)}})}});
  Vec x = make_vec({0, 0});
  FormulaResult coarse = sublevel_normal_cone_formula(fam, x, q(1), coarse_grid(), FormulaMode::Sampled);
  CHECK(coarse.cone.is_trivial());
  CHECK(coarse.exactness == Exactness::InnerApproximation);
  FormulaResult fine = sublevel_normal_cone_formula(fam, x, q(1), default_grid(), FormulaMode::Sampled);
  CHECK(cone_equal(fine.cone, oracle_cone(fam, x)));
  CHECK(fine.grid_stable);
  CHECK(fine.exactness == Exactness::Exact);
  CHECK(cone_subset(coarse.cone, fine.cone));
}

TEST_CASE("singleton examples") {
  PolyhedralFunction absm1 = PolyhedralFunction::max_affine({{make_vec({1}), q(-1)}, {make_vec({-1}), q(-1)}});
  CHECK(cone_equal(singleton_sublevel_normal_cone(absm1, make_vec({1}), q(1, 2), default_grid()).cone,
                   cone(1, {make_vec({1})})));
  CHECK(singleton_sublevel_normal_cone(absm1, make_vec({0}), q(1, 2), default_grid()).cone.is_trivial());
  PolyhedralFunction mx = PolyhedralFunction::max_affine({{make_vec({1, 0}), q(0)}, {make_vec({0, 1}), q(0)}});
  CHECK(cone_equal(singleton_sublevel_normal_cone(mx, make_vec({0, -1}), q(1), default_grid()).cone,
                   cone(2, {make_vec({1, 0})})));
}

TEST_CASE("strict sublevel normal cone") {
  SupFamily fam(2, {affine("1", {1, 1}, -1), affine("2", {1, -1}, -1)});
  FormulaResult r = strict_sublevel_normal_cone(fam, make_vec({1, 0}), q(1), default_grid(), FormulaMode::ExactAffine);
  CHECK(cone_equal(r.cone, cone(2, {make_vec({1, 1}), make_vec({1, -1})})));
  CHECK(strict_sublevel_normal_cone(fam, make_vec({0, 0}), q(1), default_grid(), FormulaMode::Sampled).cone.is_trivial());
  SupFamily abs(1, {{"f", PolyhedralFunction::max_affine({{make_vec({1}), q(0)}, {make_vec({-1}), q(0)}})}});
  CHECK_THROWS_AS(strict_sublevel_normal_cone(abs, make_vec({0}), q(1), default_grid(), FormulaMode::Sampled),
                  PreconditionError);
  CHECK(slater_point(fam).has_value());
  CHECK_FALSE(slater_point(abs).has_value());
}

TEST_CASE("intersection over an epsilon list") {
  Vec x = make_vec({0, 0});
  SupFamily orth(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, 0)});
  IntersectionResult r = sublevel_normal_cone_intersection(orth, x, {q(1), q(1, 2), q(1, 4)}, default_grid(),
                                                           FormulaMode::ExactAffine);
  CHECK(cone_equal(r.cone, cone(2, {make_vec({1, 0}), make_vec({0, 1})})));
  CHECK(r.scaling_consistent == true);

  SupFamily inner(2, {affine("1", {1, 0}, -1), affine("2", {0, 1}, -2)});
  CHECK(sublevel_normal_cone_intersection(inner, x, {q(1), q(1, 2)}, default_grid(), FormulaMode::ExactAffine)
            .cone.is_trivial());

  SupFamily single(2, {affine("1", {2, 3}, 0)});
  CHECK(cone_equal(
      sublevel_normal_cone_intersection(single, x, {q(1, 3), q(1, 9)}, default_grid(), FormulaMode::ExactAffine).cone,
      cone(2, {make_vec({2, 3})})));
  CHECK_THROWS_AS(sublevel_normal_cone_intersection(orth, x, {q(1), q(2)}, default_grid(), FormulaMode::ExactAffine),
                  InputError);
}

TEST_CASE("closure conditions") {
  SupFamily fam(2, {affine("1", {1, 0}, 0), {"2", ImproperFunction{half({0, 1}, 0)}}});
  ClosureConditionVerdict v = closure_condition_check(fam);
  CHECK(v.hull_condition);
  CHECK(v.member_condition);

  SublevelOracleQC qc(2, {QCMember::sublevel("a", half({1, 0}, 0)), QCMember::sublevel("b", half({0, 1}, 0))});
  v = closure_condition_check(qc);
  CHECK(v.hull_condition);
  CHECK(v.member_condition);

  // Non-lsc member: g = -1 on (-inf, 0), +inf at 0 and on (0, inf). [g <= 0] is open.
  QuasiConvex1D g = QuasiConvex1D::create({q(0)}, {P1{AffinePiece1D{q(0), q(-1)}}, P1{}}, {ExtendedValue::pos_inf()});
  SublevelOracleQC open(1, {QCMember::composite("g", g, make_vec({1}), q(0))});
  CHECK(open.feasible(make_vec({-1})));
  CHECK_FALSE(open.feasible(make_vec({0})));
  v = closure_condition_check(open);
  CHECK(v.hull_condition);
  CHECK(v.member_condition);

  // Failing comparison: cl[f <= 0] = (-inf, -1] against a hull side (-inf, 0].
  ClosureConditionVerdict bad = compare_closure_sides(half({1}, -1), half({1}, 0), half({1}, -1));
  CHECK_FALSE(bad.hull_condition);
  CHECK(bad.member_condition);
  REQUIRE(bad.witness.has_value());
  CHECK(half({1}, 0).contains(*bad.witness));
  CHECK_FALSE(half({1}, -1).contains(*bad.witness));

  SublevelOracleQC empty(1, {QCMember::sublevel("a", half({1}, -1)), QCMember::sublevel("b", half({-1}, -1))});
  CHECK_THROWS_AS(closure_condition_check(empty), PreconditionError);
}

TEST_CASE("quasi-convex normal cone") {
  Vec x = make_vec({0, 0});
  SublevelOracleQC qc(2, {QCMember::sublevel("a", half({1, 0}, 0)), QCMember::sublevel("b", half({0, 1}, 0))});
  ConeGen quadrant = cone(2, {make_vec({1, 0}), make_vec({0, 1})});
  for (auto eps : {q(1), q(1, 16)}) {
    CHECK(cone_equal(qc_sublevel_normal_cone(qc, x, eps, ClosureEvidence::check()).cone, quadrant));
  }
  CHECK(cone_equal(qc_sublevel_normal_cone(qc, x, q(1), ClosureEvidence::continuity(make_vec({-1, -1}))).cone, quadrant));
  CHECK_THROWS_AS(qc_sublevel_normal_cone(qc, x, q(1), ClosureEvidence::none()), RefusedError);
  CHECK_THROWS_AS(qc_sublevel_normal_cone(qc, x, q(1), ClosureEvidence::continuity(make_vec({0, -1}))), RefusedError);

  SublevelOracleQC line(1, {QCMember::from_smooth("c", cubic(make_vec({1}), q(0)))});
  CHECK(cone_equal(qc_sublevel_normal_cone(line, make_vec({0}), q(1), ClosureEvidence::check()).cone,
                   cone(1, {make_vec({1})})));

  PolyhedronH box(2);
  box.add(make_vec({1, 0}), q(1));
  box.add(make_vec({-1, 0}), q(1));
  box.add(make_vec({0, 1}), q(1));
  box.add(make_vec({0, -1}), q(1));
  PolyhedronH tri(2);
  tri.add(make_vec({1, 1}), q(1));
  tri.add(make_vec({-1, 0}), q(1));
  tri.add(make_vec({0, -1}), q(1));
  SublevelOracleQC bounded(2, {QCMember::sublevel("box", box), QCMember::sublevel("tri", tri)});
  CHECK(qc_sublevel_normal_cone(bounded, x, q(1, 2), ClosureEvidence::check()).cone.is_trivial());
}

TEST_CASE("Frechet outer cone") {
  SublevelOracleQC line(1, {QCMember::from_smooth("c", cubic(make_vec({1}), q(0)))});
  FrechetResult r = frechet_outer_cone(line, make_vec({0}), q(1, 4));
  CHECK(cone_contains(r.cone, make_vec({1})));
  CHECK(cone_subset(qc_sublevel_normal_cone(line, make_vec({0}), q(1, 4), ClosureEvidence::check()).cone, r.cone));

  SmoothQCMember lin{make_vec({2, 1}), q(0), Polynomial({q(0), q(1)}), 1, q(0)};
  SublevelOracleQC aff(2, {QCMember::from_smooth("l", lin)});
  CHECK(cone_equal(frechet_outer_cone(aff, make_vec({0, 0}), q(1, 4)).cone, cone(2, {make_vec({2, 1})})));

  SublevelOracleQC two(2, {QCMember::from_smooth("a", cubic(make_vec({1, 0}), q(0))),
                           QCMember::from_smooth("b", cubic(make_vec({0, 1}), q(0)))});
  FrechetResult t = frechet_outer_cone(two, make_vec({0, 0}), q(1, 4));
  CHECK(cone_subset(cone(2, {make_vec({1, 0}), make_vec({0, 1})}), t.cone));
}

TEST_CASE("witness search near the sublevel set") {
  QCMember c = QCMember::from_smooth("c", cubic(make_vec({1}), q(0)));
  WitnessReport r = subgradient_witness_search(c, make_vec({0}), q(1, 16));
  CHECK(r.sqrt_eps == q(1, 4));
  CHECK(r.not_found == 0);
  bool saw_ray = false;
  for (const auto& e : r.entries) {
    REQUIRE(e.witness.has_value());
    const auto& w = *e.witness;
    CHECK(add(scale(w.lambda, w.u), w.p) == e.generator);
    CHECK(sup_norm(w.p) <= r.sqrt_eps);
    CHECK(sup_norm(sub(w.y, make_vec({0}))) <= 3 * r.sqrt_eps);
    if (e.is_ray) {
      saw_ray = true;
      CHECK(e.generator == make_vec({1}));
      CHECK(is_zero(w.p));
      CHECK(sgn(w.lambda) > 0);
    }
  }
  CHECK(saw_ray);

  PolyhedralFunction lin = PolyhedralFunction::affine(make_vec({1, 2}), q(-3));
  WitnessReport l = subgradient_witness_search(lin, make_vec({1, 1}), q(1, 4));
  CHECK(l.not_found == 0);
  for (const auto& e : l.entries) {
    if (e.is_ray) CHECK(e.witness->u == make_vec({1, 2}));
  }

  PolyhedralFunction absm1 = PolyhedralFunction::max_affine({{make_vec({1}), q(-1)}, {make_vec({-1}), q(-1)}});
  WitnessReport a = subgradient_witness_search(absm1, make_vec({1}), q(1, 16));
  CHECK(a.not_found == 0);
  CHECK_THROWS_AS(subgradient_witness_search(absm1, make_vec({1}), q(1, 8)), InputError);
}

TEST_CASE("formula properties on random max-affine families") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + iter % 2;
    SupFamily fam = random_max_affine_family(rng, n);
    Vec x = zeros(n);
    if (!fam.evaluate(x).is_finite() || sgn(fam.evaluate(x).value()) > 0) continue;
    ++checked;
    ConeGen truth = oracle_cone(fam, x);
    FormulaResult coarse = sublevel_normal_cone_formula(fam, x, q(1), coarse_grid(), FormulaMode::Sampled);
    FormulaResult fine = sublevel_normal_cone_formula(fam, x, q(1), default_grid(), FormulaMode::Sampled);
    CHECK(cone_subset(coarse.cone, truth));  // one-sided soundness
    CHECK(cone_subset(fine.cone, truth));
    CHECK(cone_subset(coarse.cone, fine.cone));  // refining never shrinks
    for (auto eps : {q(1, 2), q(1, 4)}) {
      CHECK(cone_equal(sublevel_normal_cone_formula(fam, x, eps, default_grid(), FormulaMode::Sampled).cone, fine.cone));
    }
    CHECK(cone_equal(fine.cone, truth));
    CHECK(cone_equal(dom_sup_normal_cone(fam, x, q(1)).cone, polyhedron_normal_cone(dom_polyhedron(fam), x)));
  }
  CHECK(checked > 10);
}

TEST_CASE("fault injection breaks soundness") {
  SupFamily orth(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, 0)});
  FormulaOptions bad;
  bad.inject_fault = true;
  FormulaResult r = sublevel_normal_cone_formula(orth, make_vec({0, 0}), q(1), default_grid(), FormulaMode::ExactAffine, bad);
  CHECK_FALSE(cone_subset(r.cone, oracle_cone(orth, make_vec({0, 0}))));
}

TEST_CASE("oracle self-consistency") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 30; ++iter) {
    PolyhedronH P(2);
    for (int i = 0; i < 4; ++i) {
      Vec a{q(static_cast<long>(rng() % 5) - 2), q(static_cast<long>(rng() % 5) - 2)};
      P.add(a, q(static_cast<long>(rng() % 2)));
    }
    Vec x = make_vec({0, 0});
    ConeGen direct = polyhedron_normal_cone(P, x);
    ConeGen via_normal_set = recession_cone(eps_normal_set(P, x, q(0)));
    CHECK(cone_equal(direct, via_normal_set));
    PolyhedronH redundant = P;
    for (const auto& h : P.constraints) redundant.add(scale(q(2), h.normal), 2 * h.offset + 1);
    CHECK(cone_equal(direct, polyhedron_normal_cone(redundant, x)));
  }
  CHECK_THROWS_AS(polyhedron_normal_cone(half({1, 0}, -1), make_vec({0, 0})), PreconditionError);
}
