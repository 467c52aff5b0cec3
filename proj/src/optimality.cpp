#include "snc/optimality.hpp"

#include <algorithm>
#include <exception>

#include "snc/oracle.hpp"

namespace snc {

std::string to_string(Qualification q) {
  return q == Qualification::F0ContinuousAtFeasiblePoint ? "f0-continuous-at-feasible-point" : "interior-meets-dom-f0";
}

Qualification parse_qualification(const std::string& text) {
  if (text == "f0-continuous-at-feasible-point") return Qualification::F0ContinuousAtFeasiblePoint;
  if (text == "interior-meets-dom-f0") return Qualification::InteriorMeetsDomF0;
  throw InputError("unknown qualification '" + text + "'");
}

std::string to_string(OptVerdict v) {
  switch (v) {
    case OptVerdict::Optimal: return "optimal";
    case OptVerdict::NotOptimal: return "not-optimal";
    case OptVerdict::Inconclusive: return "inconclusive";
    case OptVerdict::ConditionHolds: return "condition-holds";
  }
  return "?";
}

namespace {

// Every constraint with a nonzero normal holds strictly.
bool strictly_inside(const PolyhedronH& P, const Vec& y) {
  if (!P.contains(y)) return false;
  return std::all_of(P.constraints.begin(), P.constraints.end(),
                     [&](const HalfSpace& h) { return is_zero(h.normal) || dot(h.normal, y) < h.offset; });
}

bool feasible_for(const Constraints& cs, const Vec& y) {
  if (const auto* fam = std::get_if<SupFamily>(&cs)) {
    ExtendedValue v = fam->evaluate(y);
    return v.is_finite() && sgn(v.value()) <= 0;
  }
  return std::get<SublevelOracleQC>(cs).feasible(y);
}

PolyhedronH closed_feasible_set(const Constraints& cs) {
  if (const auto* fam = std::get_if<SupFamily>(&cs)) return sup_sublevel_polyhedron(*fam, Rational(0));
  return qc_sublevel_polyhedron(std::get<SublevelOracleQC>(cs));
}

Vec lift(const Vec& v, const Rational& last) {
  Vec out = v;
  out.push_back(last);
  return out;
}

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<long>(n)); }

// theta = g0 + q with g0 in G and q in K.
std::optional<Certificate> find_certificate(const GeneratorSet& G, const ConeGen& K) {
  if (G.empty()) return std::nullopt;
  const std::size_t np = G.points.size(), nr = G.rays.size(), nk = K.rays.size(), n = G.dim;
  LinearProgram lp(np + nr + nk);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row;
    for (const auto& p : G.points) row.push_back(p[i]);
    for (const auto& r : G.rays) row.push_back(r[i]);
    for (const auto& k : K.rays) row.push_back(k[i]);
    lp.add_row(std::move(row), LinearProgram::Sense::Eq, Rational(0));
  }
  Vec sum(np + nr + nk);
  for (std::size_t j = 0; j < np; ++j) sum[j] = 1;
  lp.add_row(std::move(sum), LinearProgram::Sense::Eq, Rational(1));
  LpResult r = solve(lp);
  if (!r.optimal()) return std::nullopt;
  Certificate c;
  c.g0 = zeros(n);
  for (std::size_t j = 0; j < np; ++j) c.g0 = add(c.g0, scale(r.point[j], G.points[j]));
  for (std::size_t j = 0; j < nr; ++j) c.g0 = add(c.g0, scale(r.point[np + j], G.rays[j]));
  c.q = zeros(n);
  for (std::size_t j = 0; j < nk; ++j) {
    c.generators.push_back(K.rays[j]);
    c.multipliers.push_back(r.point[np + nr + j]);
    c.q = add(c.q, scale(r.point[np + nr + j], K.rays[j]));
  }
  return c;
}

// A point along the unbounded direction where f0 drops below `level`.
std::optional<Vec> descend(const PolyhedralFunction& f0, const Vec& start, const Vec& dir, const Rational& level) {
  Rational t = 1;
  for (int i = 0; i < 256; ++i, t *= 2) {
    Vec y = add(start, scale(t, dir));
    ExtendedValue v = f0.evaluate(y);
    if (v.is_finite() && v.value() < level) return y;
  }
  return std::nullopt;
}

void require_in_dom(const PolyhedralFunction& f0, const Vec& x) {
  if (!f0.evaluate(x).is_finite()) throw PreconditionError("x = " + to_string(x) + " is not in dom f0");
}

}  // namespace

void validate_qualification(const ProgramInstance& prog) {
  const Vec& w = prog.witness;
  require_dim(w, prog.objective.dim(), "qualification witness");
  if (!feasible_for(prog.constraints, w)) {
    if (prog.qualification == Qualification::F0ContinuousAtFeasiblePoint)
      throw PreconditionError("qualification witness " + to_string(w) + " is not feasible");
  }
  if (prog.qualification == Qualification::F0ContinuousAtFeasiblePoint) {
    if (!strictly_inside(prog.objective.domain, w))
      throw PreconditionError("f0 is not continuous at the witness " + to_string(w) + " (not interior to dom f0)");
  } else {
    if (!prog.objective.domain.contains(w)) throw PreconditionError("qualification witness is not in dom f0");
    if (!strictly_inside(closed_feasible_set(prog.constraints), w))
      throw PreconditionError("qualification witness " + to_string(w) + " is not interior to the feasible set");
  }
}

bool verify_certificate(const PolyhedralFunction& f0, const Vec& x, const ConeGen& cone, const Certificate& c) {
  const std::size_t n = x.size();
  if (c.g0.size() != n || c.q.size() != n || c.generators.size() != c.multipliers.size()) return false;
  if (!gen_contains_point(eps_subdifferential(f0, x, Rational(0)), c.g0)) return false;
  Vec q = zeros(n);
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    if (sgn(c.multipliers[i]) < 0 || c.generators[i].size() != n) return false;
    if (!cone_contains(cone, c.generators[i])) return false;
    q = add(q, scale(c.multipliers[i], c.generators[i]));
  }
  return q == c.q && cone_contains(cone, c.q) && is_zero(add(c.g0, c.q));
}

DirectMinimum minimize_over(const PolyhedralFunction& f0, const PolyhedronH& P) {
  const std::size_t n = f0.dim();
  require_dim(zeros(P.dim), n, "feasible polyhedron");
  PolyhedronH Q(n + 1);
  for (const auto& h : P.constraints) Q.add(lift(h.normal, Rational(0)), h.offset);
  for (const auto& h : f0.domain.constraints) Q.add(lift(h.normal, Rational(0)), h.offset);
  for (const auto& piece : f0.pieces) Q.add(lift(piece.slope, Rational(-1)), -piece.intercept);
  Vec objective = zeros(n + 1);
  objective[n] = -1;
  LpResult r = lp_solve(objective, Q);
  DirectMinimum out;
  out.status = r.status;
  if (r.optimal()) {
    out.point = head(r.point, n);
    out.value = -r.value;
  } else if (r.unbounded()) {
    out.point = head(r.point, n);
    out.direction = head(r.ray, n);
  }
  return out;
}

OptimalityResult check_optimal_convex(const ProgramInstance& prog, const Rational& eps, const SGrid& grid,
                                      FormulaMode mode, const FormulaOptions& options) {
  const auto* fam = std::get_if<SupFamily>(&prog.constraints);
  if (!fam) throw InputError("check_optimal_convex needs a convex constraint family");
  const PolyhedralFunction& f0 = prog.objective;
  if (f0.dim() != fam->dim()) throw InputError("objective and constraints differ in dimension");
  fam->require_feasible(prog.x);
  require_in_dom(f0, prog.x);
  validate_qualification(prog);
  if (!closure_condition_check(*fam).hull_condition) throw PreconditionError("hull closure condition fails for the constraint family");

  FormulaResult K = sublevel_normal_cone_formula(*fam, prog.x, eps, grid, mode, options);
  OptimalityResult out;
  out.value_at_x = f0.evaluate(prog.x).value();
  out.cone = K.cone;
  out.exactness = K.exactness;
  if (auto cert = find_certificate(eps_subdifferential(f0, prog.x, Rational(0)), K.cone)) {
    out.verdict = OptVerdict::Optimal;
    out.certificate = std::move(cert);
    return out;
  }
  if (K.exactness != Exactness::Exact) {
    out.note = "membership fails for an inner approximation of the cone";
    return out;
  }
  DirectMinimum direct = minimize_over(f0, sup_sublevel_polyhedron(*fam, Rational(0)));
  if (direct.status == LpResult::Status::Unbounded) {
    out.verdict = OptVerdict::NotOptimal;
    out.improving_direction = direct.direction;
    if (auto y = descend(f0, direct.point, direct.direction, out.value_at_x)) {
      out.better_point = *y;
      out.better_value = f0.evaluate(*y).value();
    }
    out.note = "objective unbounded below on the feasible set";
  } else if (direct.status == LpResult::Status::Optimal && direct.value < out.value_at_x) {
    out.verdict = OptVerdict::NotOptimal;
    out.better_point = direct.point;
    out.better_value = direct.value;
  } else {
    out.note = "direct minimization attains f0(x) although membership fails";
  }
  return out;
}

OptimalityResult check_necessary_qc(const ProgramInstance& prog, const Rational& eps, const ClosureEvidence& evidence,
                                    std::size_t per_axis) {
  const auto* qc = std::get_if<SublevelOracleQC>(&prog.constraints);
  if (!qc) throw InputError("check_necessary_qc needs a quasi-convex constraint family");
  const PolyhedralFunction& f0 = prog.objective;
  if (f0.dim() != qc->dim()) throw InputError("objective and constraints differ in dimension");
  qc->require_feasible(prog.x);
  require_in_dom(f0, prog.x);
  validate_qualification(prog);

  OptimalityResult out;
  out.value_at_x = f0.evaluate(prog.x).value();
  QcConeResult K;
  try {
    K = qc_sublevel_normal_cone(*qc, prog.x, eps, evidence);
  } catch (const RefusedError& e) {
    out.note = e.what();
    return out;
  }
  out.cone = K.cone;
  out.exactness = Exactness::Exact;
  if (auto cert = find_certificate(eps_subdifferential(f0, prog.x, Rational(0)), K.cone)) {
    out.verdict = OptVerdict::ConditionHolds;
    out.frechet_contains_q = cone_contains(frechet_outer_cone(*qc, prog.x, eps, per_axis).cone, cert->q);
    out.certificate = std::move(cert);
    return out;
  }

  // The condition fails; exhibit a better feasible point. The midpoint with x keeps
  // every strict constraint strict.
  DirectMinimum direct = minimize_over(f0, qc_sublevel_polyhedron(*qc));
  std::optional<Vec> z;
  if (direct.status == LpResult::Status::Unbounded) {
    out.improving_direction = direct.direction;
    z = descend(f0, direct.point, direct.direction, out.value_at_x);
  } else if (direct.status == LpResult::Status::Optimal && direct.value < out.value_at_x) {
    z = direct.point;
  }
  if (z) {
    Vec m = scale(Rational(1, 2), add(prog.x, *z));
    ExtendedValue fm = f0.evaluate(m);
    if (qc->feasible(m) && fm.is_finite() && fm.value() < out.value_at_x) {
      out.verdict = OptVerdict::NotOptimal;
      out.better_point = m;
      out.better_value = fm.value();
      return out;
    }
  }
  out.note = "necessary condition fails but no better feasible point was certified";
  return out;
}

std::vector<CircleSampler::Sample> CircleSampler::sample(int level) const {
  if (level < 0 || level > 20) throw InputError("refinement level must be in 0..20");
  if (!(lo < hi)) throw InputError("sampler range needs lo < hi");
  const long N = 1L << level;
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(N));
  for (long j = 0; j < N; ++j) {
    Rational u = lo + (hi - lo) * make_rational(j, N);
    Rational d = 1 + u * u;
    out.push_back({u, Vec{(1 - u * u) / d, 2 * u / d}, b});
  }
  return out;
}

namespace {

// min t with |target - h|_inf <= t, h in co(points) + cone(rays); no points means h in cone(rays).
Rational sup_distance(const Vec& target, const std::vector<Vec>& points, const std::vector<Vec>& rays) {
  const std::size_t n = target.size(), np = points.size(), nr = rays.size();
  LinearProgram lp(np + nr + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row;
    for (const auto& p : points) row.push_back(p[i]);
    for (const auto& r : rays) row.push_back(r[i]);
    row.push_back(Rational(1));
    lp.add_row(row, LinearProgram::Sense::Ge, target[i]);  // h_i + t >= target_i
    for (std::size_t j = 0; j < np + nr; ++j) row[j] = -row[j];
    lp.add_row(std::move(row), LinearProgram::Sense::Ge, -target[i]);  // t - h_i >= -target_i
  }
  if (np > 0) {
    Vec sum(np + nr + 1);
    for (std::size_t j = 0; j < np; ++j) sum[j] = 1;
    lp.add_row(std::move(sum), LinearProgram::Sense::Eq, Rational(1));
  }
  lp.objective = zeros(np + nr + 1);
  lp.objective[np + nr] = -1;
  LpResult r = solve(lp);
  if (!r.optimal()) throw std::logic_error("distance LP is always solvable");
  return -r.value;
}

SupFamily affine_family(const std::vector<std::pair<Vec, Rational>>& rows) {
  std::vector<FamilyMember> members;
  for (std::size_t t = 0; t < rows.size(); ++t)
    members.push_back({"t" + std::to_string(t), PolyhedralFunction::affine(rows[t].first, -rows[t].second)});
  return SupFamily(rows.front().first.size(), std::move(members));
}

}  // namespace

SipResult check_sip_linear(const LinearSIPInstance& in, const Rational& eps, const std::vector<int>& levels_in) {
  const std::size_t n = in.c.size();
  require_dim(in.x, n, "candidate");
  if (sgn(eps) <= 0) throw InputError("epsilon must be positive");
  if (in.finite.empty() == !in.sampler.has_value())
    throw InputError("a linear SIP needs exactly one of a finite family or a sampler");
  const Vec minus_c = negate(in.c);
  SipResult out;

  if (!in.finite.empty()) {
    std::vector<Vec> tight;
    std::vector<std::size_t> tight_index;
    for (std::size_t t = 0; t < in.finite.size(); ++t) {
      const auto& [a, b] = in.finite[t];
      require_dim(a, n, "constraint normal");
      Rational v = dot(a, in.x);
      if (v > b) throw PreconditionError("x violates constraint " + std::to_string(t));
      if (v == b) {
        tight.push_back(a);
        tight_index.push_back(t);
      }
    }
    ConeGen classical(n, tight);
    SipLevel lvl;
    lvl.points = in.finite.size();
    lvl.cone = canonicalize(classical);
    lvl.residual = sup_distance(minus_c, {}, tight);
    FormulaResult f = sublevel_normal_cone_formula(affine_family(in.finite), in.x, eps, default_grid(),
                                                   FormulaMode::ExactAffine, FormulaOptions{false, false});
    lvl.hull_residual = sup_distance(minus_c, f.hull.points, f.hull.rays);
    out.formula_agrees = cone_equal(f.cone, lvl.cone);
    out.levels.push_back(lvl);
    if (auto mult = cone_membership(classical, minus_c)) {
      out.verdict = OptVerdict::Optimal;
      for (std::size_t i = 0; i < mult->size(); ++i) {
        if (sgn((*mult)[i]) != 0) out.multipliers.emplace_back(tight_index[i], (*mult)[i]);
      }
      return out;
    }
    PolyhedronH P(n);
    for (const auto& [a, b] : in.finite) P.add(a, b);
    LpResult r = lp_solve(minus_c, P);
    if (r.unbounded()) {
      out.verdict = OptVerdict::NotOptimal;
      out.improving_direction = r.ray;
      Rational gap = dot(in.c, r.point) - dot(in.c, in.x);
      Rational k = sgn(gap) < 0 ? Rational(0) : gap / -dot(in.c, r.ray) + 1;
      out.better_point = add(r.point, scale(k, r.ray));
      out.note = "objective unbounded below on the feasible set";
    } else if (r.optimal() && r.value > dot(minus_c, in.x)) {
      out.verdict = OptVerdict::NotOptimal;
      out.better_point = r.point;
    } else {
      out.note = "direct LP attains <c, x> although the classical condition fails";
    }
    return out;
  }

  std::vector<int> levels = levels_in;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.empty()) throw InputError("no refinement levels given");
  if (n != 2) throw InputError("the circle sampler lives in dimension 2");

  const long L = static_cast<long>(levels.size());
  out.levels.resize(levels.size());
  std::vector<std::vector<std::pair<std::size_t, Rational>>> mults(levels.size());
  std::vector<std::exception_ptr> errors(levels.size());
#pragma omp parallel for schedule(dynamic)
  for (long li = 0; li < L; ++li) {
    try {
      auto samples = in.sampler->sample(levels[li]);
      std::vector<std::pair<Vec, Rational>> rows;
      std::vector<Vec> tight;
      std::vector<std::size_t> tight_index;
      for (std::size_t j = 0; j < samples.size(); ++j) {
        Rational v = dot(samples[j].a, in.x);
        if (v > samples[j].b)
          throw PreconditionError("x violates the sampled constraint at u = " + to_string(samples[j].u));
        if (v == samples[j].b) {
          tight.push_back(samples[j].a);
          tight_index.push_back(j);
        }
        rows.emplace_back(samples[j].a, samples[j].b);
      }
      FormulaResult f = sublevel_normal_cone_formula(affine_family(rows), in.x, eps, default_grid(),
                                                     FormulaMode::ExactAffine, FormulaOptions{false, false});
      SipLevel& lvl = out.levels[li];
      lvl.level = levels[li];
      lvl.points = samples.size();
      lvl.cone = f.cone;
      lvl.residual = sup_distance(minus_c, {}, f.cone.rays);
      lvl.hull_residual = sup_distance(minus_c, f.hull.points, f.hull.rays);
      if (sgn(lvl.residual) == 0) {
        auto mult = cone_membership(ConeGen(n, tight), minus_c);
        for (std::size_t i = 0; mult && i < mult->size(); ++i) {
          if (sgn((*mult)[i]) != 0) mults[li].emplace_back(tight_index[i], (*mult)[i]);
        }
      }
    } catch (...) {
      errors[li] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::size_t i = 1; i < out.levels.size(); ++i) {
    if (out.levels[i].residual > out.levels[i - 1].residual) out.residual_non_increasing = false;
  }
  for (std::size_t i = 0; i < out.levels.size(); ++i) {
    if (sgn(out.levels[i].residual) == 0) {
      out.verdict = OptVerdict::Optimal;
      out.multipliers = mults[i];
      return out;
    }
  }
  out.note = out.residual_non_increasing ? "residual positive at every level, non-increasing"
                                         : "residual positive at every level";
  return out;
}

}  // namespace snc
