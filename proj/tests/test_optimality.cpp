#include <doctest.h>

#include <chrono>

#include "snc/optimality.hpp"
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

SupFamily orthant() { return SupFamily(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, 0)}); }

ProgramInstance program(PolyhedralFunction f0, Constraints cs, Vec x) {
  ProgramInstance p{std::move(f0), std::move(cs), x, Qualification::F0ContinuousAtFeasiblePoint, x};
  return p;
}

SmoothQCMember cubic(Vec a) { return SmoothQCMember{std::move(a), q(0), Polynomial({q(0), q(0), q(0), q(1)}), 1, q(0)}; }

}  // namespace

TEST_CASE("verification verdicts") {
  FormulaInstance in;
  in.id = "orthant";
  in.constraints = orthant();
  in.x = make_vec({0, 0});
  in.mode = FormulaMode::ExactAffine;
  VerificationReport r = verify_formula_instance(in);
  CHECK(r.verdict == Verdict::Equal);
  CHECK(cone_equal(r.formula, ConeGen(2, {make_vec({1, 0}), make_vec({0, 1})})));

  FormulaInstance m;
  m.id = "max";
  m.constraints = SupFamily(2, {{"f", PolyhedralFunction::max_affine({{make_vec({1, 0}), q(0)}, {make_vec({0, 1}), q(0)}})}});
  m.x = make_vec({0, 0});
  m.grid = coarse_grid();
  VerificationReport coarse = verify_formula_instance(m);
  CHECK(coarse.verdict == Verdict::FormulaStrictlyInside);
  REQUIRE(coarse.witness.has_value());
  CHECK(cone_contains(coarse.oracle, *coarse.witness));
  m.grid = default_grid();
  CHECK(verify_formula_instance(m).verdict == Verdict::Equal);

  FormulaInstance bad = in;
  bad.options.inject_fault = true;
  CHECK(verify_formula_instance(bad).verdict == Verdict::Violation);

  FormulaInstance d = in;
  d.target = Target::Dom;
  d.constraints = SupFamily(2, {affine("1", {1, 0}, 0), {"2", ImproperFunction{half({0, 1}, 0)}}});
  CHECK(verify_formula_instance(d).verdict == Verdict::Equal);

  FormulaInstance qc;
  qc.target = Target::Qc;
  qc.constraints = SublevelOracleQC(2, {QCMember::sublevel("a", half({1, 0}, 0)), QCMember::from_smooth("b", cubic(make_vec({0, 1})))});
  qc.x = make_vec({0, 0});
  CHECK(verify_formula_instance(qc).verdict == Verdict::Equal);
  qc.target = Target::Sublevel;
  CHECK_THROWS_AS(verify_formula_instance(qc), InputError);
}

TEST_CASE("serial and parallel batches agree") {
  std::vector<FormulaInstance> batch;
  for (long k = 0; k < 12; ++k) {
    FormulaInstance in;
    in.id = "i" + std::to_string(k);
    in.constraints = SupFamily(2, {affine("1", {1, k % 3}, 0), affine("2", {-1, 1}, -(k % 2))});
    in.x = make_vec({0, 0});
    in.eps = q(1, 1 + k);
    batch.push_back(in);
  }
  auto a = verify_batch_serial(batch);
  auto b = verify_batch_parallel(batch);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(cone_equal(a[i].formula, b[i].formula));
    CHECK(a[i].verdict == Verdict::Equal);
  }
  batch[3].x = make_vec({5, 5});
  CHECK_THROWS_AS(verify_batch_parallel(batch), PreconditionError);
}

TEST_CASE("convex optimality examples") {
  Vec x = make_vec({0, 0});
  ProgramInstance p = program(PolyhedralFunction::affine(make_vec({-1, -1}), q(0)), orthant(), x);
  OptimalityResult r = check_optimal_convex(p, q(1), default_grid(), FormulaMode::ExactAffine);
  CHECK(r.verdict == OptVerdict::Optimal);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->q == make_vec({1, 1}));
  CHECK(verify_certificate(p.objective, x, r.cone, *r.certificate));
  Certificate forged = *r.certificate;
  forged.g0 = make_vec({0, 0});
  CHECK_FALSE(verify_certificate(p.objective, x, r.cone, forged));

  ProgramInstance up = program(PolyhedralFunction::affine(make_vec({1, 1}), q(0)), orthant(), x);
  OptimalityResult u = check_optimal_convex(up, q(1), default_grid(), FormulaMode::ExactAffine);
  CHECK(u.verdict == OptVerdict::NotOptimal);
  REQUIRE(u.improving_direction.has_value());
  CHECK(dot(make_vec({1, 1}), *u.improving_direction) < 0);
  REQUIRE(u.better_point.has_value());
  CHECK(orthant().evaluate(*u.better_point).value() <= 0);
  CHECK(*u.better_value < 0);

  PolyhedralFunction abs = PolyhedralFunction::max_affine({{make_vec({1}), q(0)}, {make_vec({-1}), q(0)}});
  SupFamily trivial(1, {affine("1", {0}, -1)});
  OptimalityResult t = check_optimal_convex(program(abs, trivial, make_vec({0})), q(1), default_grid(), FormulaMode::Sampled);
  CHECK(t.verdict == OptVerdict::Optimal);
  CHECK(t.cone.is_trivial());

  // Bounded not-optimal case: min x1 on the box [-1, 0]^2, x at the origin.
  SupFamily box(2, {affine("1", {1, 0}, 0), affine("2", {0, 1}, 0), affine("3", {-1, 0}, -1), affine("4", {0, -1}, -1)});
  OptimalityResult b = check_optimal_convex(program(PolyhedralFunction::affine(make_vec({1, 0}), q(0)), box, x), q(1),
                                            default_grid(), FormulaMode::ExactAffine);
  CHECK(b.verdict == OptVerdict::NotOptimal);
  CHECK(*b.better_value == -1);
}

TEST_CASE("convex optimality preconditions") {
  Vec x = make_vec({0, 0});
  ProgramInstance p = program(PolyhedralFunction::affine(make_vec({-1, -1}), q(0)), orthant(), make_vec({1, 0}));
  CHECK_THROWS_AS(check_optimal_convex(p, q(1), default_grid(), FormulaMode::ExactAffine), PreconditionError);

  PolyhedralFunction restricted({AffinePiece{make_vec({-1, -1}), q(0)}}, half({1, 0}, 0));
  ProgramInstance bad = program(restricted, orthant(), x);
  CHECK_THROWS_AS(check_optimal_convex(bad, q(1), default_grid(), FormulaMode::ExactAffine), PreconditionError);
  bad.witness = make_vec({-1, -1});
  CHECK(check_optimal_convex(bad, q(1), default_grid(), FormulaMode::ExactAffine).verdict == OptVerdict::Optimal);
  bad.qualification = Qualification::InteriorMeetsDomF0;
  CHECK_NOTHROW(validate_qualification(bad));
  bad.witness = make_vec({0, -1});
  CHECK_THROWS_AS(validate_qualification(bad), PreconditionError);
}

TEST_CASE("optimality verdict matches direct minimization") {
  // f0 = max(<g1, y>, <g2, y>) on the orthant-shifted box; x ranges over box vertices.
  SupFamily box(2, {affine("1", {1, 0}, -1), affine("2", {0, 1}, -1), affine("3", {-1, 0}, -1), affine("4", {0, -1}, -1)});
  PolyhedralFunction f0 = PolyhedralFunction::max_affine({{make_vec({1, 2}), q(0)}, {make_vec({-2, 1}), q(0)}});
  PolyhedronH P = sup_sublevel_polyhedron(box, q(0));
  DirectMinimum direct = minimize_over(f0, P);
  REQUIRE(direct.status == LpResult::Status::Optimal);
  for (long a : {-1, 0, 1}) {
    for (long b : {-1, 0, 1}) {
      Vec x = make_vec({a, b});
      OptimalityResult r = check_optimal_convex(program(f0, box, x), q(1, 2), default_grid(), FormulaMode::ExactAffine);
      const bool minimal = f0.evaluate(x).value() == direct.value;
      CHECK(r.verdict == (minimal ? OptVerdict::Optimal : OptVerdict::NotOptimal));
      if (r.certificate) CHECK(verify_certificate(f0, x, r.cone, *r.certificate));
    }
  }
}

TEST_CASE("quasi-convex necessary condition") {
  SublevelOracleQC line(1, {QCMember::from_smooth("c", cubic(make_vec({1})))});
  ProgramInstance down = program(PolyhedralFunction::affine(make_vec({-1}), q(0)), line, make_vec({0}));
  down.witness = make_vec({-1});
  OptimalityResult h = check_necessary_qc(down, q(1, 4), ClosureEvidence::check());
  CHECK(h.verdict == OptVerdict::ConditionHolds);
  CHECK(h.frechet_contains_q == true);
  CHECK(h.certificate->q == make_vec({1}));

  ProgramInstance up = down;
  up.objective = PolyhedralFunction::affine(make_vec({1}), q(0));
  OptimalityResult n = check_necessary_qc(up, q(1, 4), ClosureEvidence::check());
  CHECK(n.verdict == OptVerdict::NotOptimal);
  REQUIRE(n.better_point.has_value());
  CHECK(line.feasible(*n.better_point));
  CHECK((*n.better_point)[0] < 0);

  SublevelOracleQC box(1, {QCMember::sublevel("b", PolyhedronH(1, {HalfSpace{make_vec({1}), q(1)}, HalfSpace{make_vec({-1}), q(1)}}))});
  ProgramInstance inner = program(PolyhedralFunction::affine(make_vec({1}), q(0)), box, make_vec({0}));
  OptimalityResult i = check_necessary_qc(inner, q(1), ClosureEvidence::check());
  CHECK(i.verdict == OptVerdict::NotOptimal);
  CHECK(*i.better_value < 0);

  CHECK(check_necessary_qc(down, q(1, 4), ClosureEvidence::none()).verdict == OptVerdict::Inconclusive);
}

TEST_CASE("finite linear SIP") {
  LinearSIPInstance in;
  in.c = make_vec({-1, -1});
  in.finite = {{make_vec({1, 0}), q(0)}, {make_vec({0, 1}), q(0)}};
  in.x = make_vec({0, 0});
  SipResult r = check_sip_linear(in, q(1), {});
  CHECK(r.verdict == OptVerdict::Optimal);
  CHECK(r.formula_agrees == true);
  REQUIRE(r.multipliers.size() == 2);
  CHECK(r.multipliers[0] == std::pair<std::size_t, Rational>{0, q(1)});
  CHECK(r.multipliers[1] == std::pair<std::size_t, Rational>{1, q(1)});

  in.c = make_vec({1, 1});
  SipResult n = check_sip_linear(in, q(1), {});
  CHECK(n.verdict == OptVerdict::NotOptimal);
  REQUIRE(n.improving_direction.has_value());
  CHECK(dot(in.c, *n.better_point) < 0);
  CHECK(sgn(n.levels[0].residual) > 0);

  in.x = make_vec({1, 0});
  CHECK_THROWS_AS(check_sip_linear(in, q(1), {}), PreconditionError);
}

TEST_CASE("circle SIP residuals") {
  LinearSIPInstance in;
  in.c = make_vec({-1, 0});
  in.sampler = CircleSampler{};
  in.x = make_vec({1, 0});
  auto start = std::chrono::steady_clock::now();
  SipResult r = check_sip_linear(in, q(1), {4, 5, 6, 7, 8, 9, 10});
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 10);
  REQUIRE(r.levels.size() == 7);
  CHECK(r.levels.back().points == 1024);
  CHECK(r.residual_non_increasing);
  for (const auto& l : r.levels) CHECK(sgn(l.residual) == 0);
  CHECK(r.verdict == OptVerdict::Optimal);

  // Tangent point (4/5, 3/5) sits at u = 1/3, which no dyadic grid contains.
  LinearSIPInstance off;
  off.c = negate(Vec{q(4, 5), q(3, 5)});
  off.sampler = CircleSampler{};
  off.x = Vec{q(4, 5), q(3, 5)};
  SipResult o = check_sip_linear(off, q(1, 1000), {4, 6, 8});
  CHECK(o.verdict == OptVerdict::Inconclusive);
  CHECK(o.residual_non_increasing);
  for (std::size_t i = 1; i < o.levels.size(); ++i) CHECK(o.levels[i].hull_residual <= o.levels[i - 1].hull_residual);
  CHECK(o.levels.back().hull_residual < o.levels.front().hull_residual);

  LinearSIPInstance outside = in;
  outside.x = make_vec({2, 0});
  CHECK_THROWS_AS(check_sip_linear(outside, q(1), {4}), PreconditionError);
}
