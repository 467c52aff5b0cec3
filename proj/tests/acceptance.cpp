// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "snc/oracle.hpp"
#include "snc/report.hpp"
#include "snc/suite.hpp"

using namespace snc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---- independent oracles --------------------------------------------------

// Normal cone of [f <= 0] from the tight constraints, written out directly.
ConeGen tight_normals(const SupFamily& fam, const Vec& x) {
  std::vector<Vec> rays;
  for (const auto& m : fam.members()) {
    if (const auto* f = std::get_if<PolyhedralFunction>(&m.fn)) {
      for (const auto& p : f->pieces)
        if (p(x) == 0 && !is_zero(p.slope)) rays.push_back(p.slope);
    }
    for (const auto& h : domain_of(m.fn).constraints)
      if (h.tight_at(x) && !is_zero(h.normal)) rays.push_back(h.normal);
  }
  return ConeGen(fam.dim(), rays);
}

// min f0 over P through the vertices and extreme rays of the epigraph.
struct VertexMin {
  bool unbounded = false;
  Rational value;
};
VertexMin vertex_minimum(const PolyhedralFunction& f0, const PolyhedronH& P) {
  const std::size_t n = f0.dim();
  PolyhedronH E(n + 1);
  auto lift = [](Vec v, Rational last) {
    v.push_back(std::move(last));
    return v;
  };
  for (const auto& h : P.constraints) E.add(lift(h.normal, 0), h.offset);
  for (const auto& h : f0.domain.constraints) E.add(lift(h.normal, 0), h.offset);
  for (const auto& p : f0.pieces) E.add(lift(p.slope, -1), -p.intercept);
  GeneratorSet G = h_to_v(E);
  VertexMin out;
  for (const auto& r : G.rays)
    if (sgn(r[n]) < 0) out.unbounded = true;
  bool first = true;
  for (const auto& p : G.points) {
    if (first || p[n] < out.value) out.value = p[n];
    first = false;
  }
  return out;
}

PolyhedronH random_polyhedron(Rng& rng, std::size_t n, long m, const Vec& through) {
  PolyhedronH P(n);
  for (long i = 0; i < m; ++i) {
    Vec a = rng.integer_vec(n, -3, 3);
    P.add(a, dot(a, through) + Rational(rng.integer(0, 3)));
  }
  return P;
}

GeneratorSet random_generators(Rng& rng, std::size_t n) {
  GeneratorSet G(n);
  const long np = rng.integer(1, 4), nr = rng.integer(0, 3);
  for (long i = 0; i < np; ++i) G.points.push_back(rng.integer_vec(n, -3, 3));
  for (long i = 0; i < nr; ++i) G.rays.push_back(rng.integer_vec(n, -2, 2));
  return G.normalize();
}

// ---- criteria -------------------------------------------------------------

const std::vector<Rational> kEps1 = {Rational(1), Rational(1, 2), Rational(1, 4)};

std::vector<FormulaInstance> affine_suite() {
  Rng rng(1001);
  std::vector<FormulaInstance> out;
  for (int i = 0; i < 200; ++i) out.push_back(gen_affine_instance(rng, fmt("affine-%03d", i)));
  return out;
}

Outcome criterion1() {
  auto start = Clock::now();
  std::size_t equal = 0, total = 0, improper = 0, interior = 0;
  for (const auto& base : affine_suite()) {
    const auto& fam = std::get<SupFamily>(base.constraints);
    improper += fam.has_improper() ? 1 : 0;
    ConeGen truth = tight_normals(fam, base.x);
    interior += truth.rays.empty() ? 1 : 0;
    for (const auto& eps : kEps1) {
      FormulaInstance in = base;
      in.eps = eps;
      VerificationReport r = verify_formula_instance(in);
      ++total;
      if (r.verdict == Verdict::Equal && cone_equal(r.formula, truth)) ++equal;
    }
  }
  double s = seconds_since(start);
  return {equal == total && s < 60 && improper > 0 && interior > 0,
          fmt("%zu/%zu cone_equal, %zu with improper member, %zu interior, %.1f s (limit 60 s)", equal, total, improper,
              interior, s)};
}

Outcome criterion2() {
  auto start = Clock::now();
  Rng rng(1002);
  std::vector<FormulaInstance> random;
  for (int i = 0; i < 100; ++i) random.push_back(gen_max_affine_instance(rng, fmt("maxaff-%03d", i)));
  std::size_t violations = 0;
  for (const auto& r : verify_batch_parallel(random)) violations += r.verdict == Verdict::Violation ? 1 : 0;
  std::size_t exact = 0;
  auto curated = curated_max_affine();
  for (const auto& in : curated) {
    const auto& fam = std::get<SupFamily>(in.constraints);
    FormulaResult f = sublevel_normal_cone_formula(fam, in.x, in.eps, in.grid, in.mode);
    if (f.grid_stable && f.exactness == Exactness::Exact && cone_equal(f.cone, tight_normals(fam, in.x))) ++exact;
  }
  double s = seconds_since(start);
  return {violations == 0 && exact == curated.size() && curated.size() == 25 && s < 300,
          fmt("%zu VIOLATION in 100 random, curated %zu/%zu grid-stable exact, %.1f s (limit 300 s)", violations, exact,
              curated.size(), s)};
}

Outcome criterion3() {
  std::size_t ok = 0, total = 0;
  const std::vector<std::vector<Rational>> lists = {kEps1, {Rational(1, 3), Rational(1, 9)}};
  for (const auto& in : affine_suite()) {
    const auto& fam = std::get<SupFamily>(in.constraints);
    for (const auto& list : lists) {
      IntersectionResult I = sublevel_normal_cone_intersection(fam, in.x, list, in.grid, FormulaMode::ExactAffine);
      bool good = I.scaling_consistent == true;
      for (const auto& eps : list)
        good = good && cone_equal(I.cone, sublevel_normal_cone_formula(fam, in.x, eps, in.grid, FormulaMode::ExactAffine).cone);
      ++total;
      ok += good ? 1 : 0;
    }
  }
  return {ok == total, fmt("%zu/%zu intersections equal the per-eps cones", ok, total)};
}

Outcome criterion4() {
  Rng rng(1004);
  std::size_t ok = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    FormulaInstance base = gen_dom_instance(rng, fmt("dom-%03d", i));
    const auto& fam = std::get<SupFamily>(base.constraints);
    ConeGen truth = tight_normals(SupFamily(fam.dim(), [&] {
                                    std::vector<FamilyMember> doms;
                                    for (const auto& m : fam.members()) doms.push_back({m.id, ImproperFunction{domain_of(m.fn)}});
                                    return doms;
                                  }()),
                                  base.x);
    for (const auto& eps : {Rational(1), Rational(1, 2)}) {
      ++total;
      if (cone_equal(dom_sup_normal_cone(fam, base.x, eps).cone, truth)) ++ok;
    }
  }
  return {ok == total, fmt("%zu/%zu equal the cone of the domain intersection", ok, total)};
}

Outcome criterion5() {
  Rng rng(1005);
  std::size_t ok = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    FormulaInstance base = gen_qc_instance(rng, fmt("qc-%03d", i));
    const auto& qc = std::get<SublevelOracleQC>(base.constraints);
    std::vector<Vec> rays;
    for (const auto& m : qc.members())
      for (const auto& h : m.zero_closure.constraints)
        if (h.tight_at(base.x) && !is_zero(h.normal)) rays.push_back(h.normal);
    ConeGen truth(qc.dim(), rays);
    for (const auto& eps : {Rational(1), Rational(1, 4), Rational(1, 16)}) {
      ++total;
      if (cone_equal(qc_sublevel_normal_cone(qc, base.x, eps, ClosureEvidence::check()).cone, truth)) ++ok;
    }
  }
  return {ok == total, fmt("%zu/%zu equal the oracle cone", ok, total)};
}

Outcome criterion6() {
  std::size_t ok = 0, total = 0;
  for (const auto& c : curated_smooth_qc()) {
    for (const auto& eps : {Rational(1, 4), Rational(1, 16)}) {
      ++total;
      ConeGen K = qc_sublevel_normal_cone(c.qc, c.x, eps, ClosureEvidence::check()).cone;
      if (cone_subset(K, frechet_outer_cone(c.qc, c.x, eps).cone)) ++ok;
    }
  }
  return {ok == total && total == 40, fmt("%zu/%zu containments hold", ok, total)};
}

Outcome criterion7() {
  std::size_t generators = 0, not_found = 0, bad = 0;
  for (const auto& c : curated_smooth_qc()) {
    for (const auto& m : c.qc.members()) {
      for (const auto& eps : {Rational(1, 16), Rational(1, 256)}) {
        WitnessReport r = subgradient_witness_search(m, c.x, eps);
        not_found += r.not_found;
        const Rational root = *exact_sqrt(eps);
        for (const auto& e : r.entries) {
          ++generators;
          if (!e.witness) continue;
          const auto& w = *e.witness;
          ExtendedValue fy = m.evaluate(w.y);
          bool good = sgn(w.lambda) >= 0 && sup_norm(w.p) <= root && add(scale(w.lambda, w.u), w.p) == e.generator &&
                      sup_norm(sub(w.y, c.x)) <= 3 * root && fy.is_finite() && fy.value() <= 2 * root &&
                      (!e.is_ray || is_zero(w.p));
          auto grads = m.gradients(w.y);
          good = good && std::find(grads.begin(), grads.end(), w.u) != grads.end();
          bad += good ? 0 : 1;
        }
      }
    }
  }
  return {not_found == 0 && bad == 0 && generators > 0,
          fmt("%zu generators, not-found %zu, invalid witnesses %zu", generators, not_found, bad)};
}

Outcome criterion8() {
  Rng rng(1008);
  std::size_t match = 0, certs = 0, certs_ok = 0, optimal = 0;
  for (int i = 0; i < 100; ++i) {
    ProgramCase pc = gen_program(rng, fmt("prog-%03d", i));
    const auto& fam = std::get<SupFamily>(pc.program.constraints);
    VertexMin direct = vertex_minimum(pc.program.objective, sup_sublevel_polyhedron(fam, Rational(0)));
    const bool x_min = !direct.unbounded && pc.program.objective.evaluate(pc.program.x).value() == direct.value;
    OptimalityResult r = check_optimal_convex(pc.program, Rational(1), default_grid(), pc.mode);
    bool agrees = x_min ? r.verdict == OptVerdict::Optimal : r.verdict == OptVerdict::NotOptimal;
    if (r.verdict == OptVerdict::NotOptimal) {
      // the evidence itself must check out
      if (r.better_point) {
        agrees = agrees && fam.evaluate(*r.better_point).is_finite() && sgn(fam.evaluate(*r.better_point).value()) <= 0 &&
                 pc.program.objective.evaluate(*r.better_point).value() < r.value_at_x;
      } else {
        agrees = false;
      }
    }
    match += agrees ? 1 : 0;
    optimal += x_min ? 1 : 0;
    if (r.certificate) {
      ++certs;
      certs_ok += verify_certificate(pc.program.objective, pc.program.x, tight_normals(fam, pc.program.x), *r.certificate) ? 1 : 0;
    }
  }
  return {match == 100 && certs_ok == certs,
          fmt("%zu/100 verdicts match direct minimization (%zu optimal), %zu/%zu certificates re-verify", match, optimal,
              certs_ok, certs)};
}

Outcome criterion9() {
  auto start = Clock::now();
  SipResult r = check_sip_linear(circle_tangent_instance(), Rational(1), {4, 5, 6, 7, 8, 9, 10});
  double s = seconds_since(start);
  const double last = r.levels.back().residual.get_d();
  return {r.residual_non_increasing && last <= 1e-6 && r.levels.back().points == 1024 && s < 10,
          fmt("residual non-increasing: %s, at 2^10 points %.3g, %.2f s (limit 10 s)",
              r.residual_non_increasing ? "yes" : "no", last, s)};
}

Outcome criterion10() {
  Rng rng(1010);
  std::size_t barrier_ok = 0, cap_recession = 0, dd = 0, normal = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    // barrier cone of A against the polar of its recession cone
    GeneratorSet A = random_generators(rng, n);
    ConeGen polar_rec = polar_cone(recession_cone(v_to_h(A)));
    ConeGen barrier = polar_cone(ConeGen(n, A.rays));
    bool good = cone_equal(polar_rec, barrier);
    for (const auto& d : polar_rec.rays) good = good && support_function(A, d).is_finite();
    for (const auto& r : A.rays) good = good && support_function(A, r).is_pos_inf();
    barrier_ok += good ? 1 : 0;

    // recession cone of an intersection with a common point
    Vec p = rng.integer_vec(n, -2, 2);
    std::vector<ConeGen> cones;
    PolyhedronH cap(n);
    const long k = rng.integer(2, 3);
    for (long j = 0; j < k; ++j) {
      PolyhedronH Aj = random_polyhedron(rng, n, rng.integer(1, 4), p);
      cones.push_back(recession_cone(Aj));
      cap = cap.intersect(Aj);
    }
    cap_recession += cone_equal(cone_intersection(cones), recession_cone(cap)) ? 1 : 0;

    PolyhedronH P = random_polyhedron(rng, n, rng.integer(1, 5), p);
    GeneratorSet G = h_to_v(P);
    GeneratorSet H = random_generators(rng, n);
    dd += (same_set(v_to_h(G), P) && same_set(h_to_v(v_to_h(H)), H)) ? 1 : 0;

    const Rational eps = make_rational(rng.integer(0, 4), 2);
    normal += same_set(eps_normal_set(P, p, eps), eps_subdifferential(PolyhedralFunction::indicator(P), p, eps)) ? 1 : 0;
  }
  std::size_t closure = 0;
  auto cases = curated_closure_cases();
  for (const auto& c : cases) closure += sublevel_closure_identity(c.f).holds ? 1 : 0;
  bool pass = barrier_ok == 1000 && cap_recession == 1000 && dd == 1000 && normal == 1000 && closure == cases.size() && cases.size() == 20;
  return {pass, fmt("barrier/recession %zu/1000, intersection recession %zu/1000, round trips %zu/1000, "
                    "normal set vs indicator %zu/1000, 1-D closure %zu/%zu",
                    barrier_ok, cap_recession, dd, normal, closure, cases.size())};
}

Outcome criterion11() {
  SuiteOptions opt;
  auto a = run_full_suite(opt);
  auto b = run_full_suite(opt);
  opt.parallel = false;
  auto c = run_full_suite(opt);
  std::string ra = render_records(a, ReportFormat::Machine), rb = render_records(b, ReportFormat::Machine),
              rc = render_records(c, ReportFormat::Machine);
  return {ra == rb && ra == rc && !ra.empty(),
          fmt("%zu records, %zu bytes; repeat run %s, serial run %s", a.records.size(), ra.size(),
              ra == rb ? "identical" : "DIFFERENT", ra == rc ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"affine-family exactness", criterion1},
      {"max-affine inner approximation and stabilization", criterion2},
      {"finite eps-list intersection", criterion3},
      {"domain normal cone", criterion4},
      {"quasi-convex normal cone", criterion5},
      {"Frechet outer cone containment", criterion6},
      {"witness search", criterion7},
      {"optimality verdicts", criterion8},
      {"linear SIP circle residuals", criterion9},
      {"preliminary identities", criterion10},
      {"determinism", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
