#include "snc/formulas.hpp"

#include <algorithm>

#include "snc/oracle.hpp"

namespace snc {

std::string to_string(FormulaMode m) { return m == FormulaMode::ExactAffine ? "exact-affine" : "sampled"; }

std::string to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "inner-approximation"; }

FormulaMode parse_mode(const std::string& text) {
  if (text == "exact-affine") return FormulaMode::ExactAffine;
  if (text == "sampled") return FormulaMode::Sampled;
  throw InputError("unknown mode '" + text + "' (expected exact-affine or sampled)");
}

namespace {

void require_positive(const Rational& eps) {
  if (sgn(eps) <= 0) throw InputError("epsilon must be positive, got " + to_string(eps));
}

GeneratorSet reflect(const GeneratorSet& G) {
  GeneratorSet r(G.dim);
  for (const auto& p : G.points) r.points.push_back(negate(p));
  for (const auto& d : G.rays) r.rays.push_back(negate(d));
  return r;
}

void record(std::vector<BranchEntry>& log, const std::string& member, const char* branch, std::optional<Rational> s,
            const GeneratorSet& G) {
  log.push_back({member, branch, std::move(s), G.points.size(), G.rays.size()});
}

// Hull of A_eps and B_eps with the s-union sampled on the grid.
GeneratorSet sampled_hull(const SupFamily& family, const Vec& x, const Rational& eps, const SGrid& grid,
                          const FormulaOptions& options, std::vector<BranchEntry>* log) {
  std::vector<GeneratorSet> parts;
  std::vector<BranchEntry> entries;
  for (const auto& m : family.members()) {
    if (const auto* imp = std::get_if<ImproperFunction>(&m.fn)) {
      GeneratorSet G = eps_normal_set(imp->domain, x, eps);
      record(entries, m.id, "B", std::nullopt, G);
      parts.push_back(std::move(G));
      continue;
    }
    const auto& f = std::get<PolyhedralFunction>(m.fn);
    SubdifferentialAt sub(f, x);
    const Rational fx = sub.value().value();
    for (const auto& s : grid.values) {
      if (s * fx < -eps) continue;
      GeneratorSet G = sub.at(eps / s).scaled(s);
      record(entries, m.id, "A", s, G);
      parts.push_back(std::move(G));
    }
    if (grid.tail && sgn(fx) == 0) {
      // union over s >= s_max of s * d0 f_t(x)
      GeneratorSet d0 = sub.at(Rational(0));
      GeneratorSet T(family.dim());
      for (const auto& p : d0.points) {
        T.points.push_back(scale(grid.max(), p));
        T.rays.push_back(p);
      }
      T.rays.insert(T.rays.end(), d0.rays.begin(), d0.rays.end());
      T.normalize();
      record(entries, m.id, "A-tail", grid.max(), T);
      parts.push_back(std::move(T));
    }
  }
  if (options.inject_fault) {
    for (auto& G : parts) G = reflect(G);
  }
  if (log) *log = std::move(entries);
  return closed_conv_hull_union(parts);
}

// Closed form of the s-union for affine members on the whole space.
GeneratorSet affine_hull(const SupFamily& family, const Vec& x, const Rational& eps, const FormulaOptions& options,
                         std::vector<BranchEntry>* log) {
  std::vector<GeneratorSet> parts;
  std::vector<BranchEntry> entries;
  const std::size_t n = family.dim();
  for (const auto& m : family.members()) {
    if (const auto* imp = std::get_if<ImproperFunction>(&m.fn)) {
      GeneratorSet G = eps_normal_set(imp->domain, x, eps);
      record(entries, m.id, "B", std::nullopt, G);
      parts.push_back(std::move(G));
      continue;
    }
    const auto& f = std::get<PolyhedralFunction>(m.fn);
    const AffinePiece& piece = f.pieces.front();
    const Rational fx = piece(x);
    GeneratorSet G(n);
    G.points.push_back(zeros(n));
    if (sgn(fx) == 0) {
      G.rays.push_back(piece.slope);
      record(entries, m.id, "A-affine-ray", std::nullopt, G);
    } else {
      G.points.push_back(scale(eps / -fx, piece.slope));
      record(entries, m.id, "A-affine-segment", std::nullopt, G);
    }
    G.normalize();
    parts.push_back(std::move(G));
  }
  if (options.inject_fault) {
    for (auto& G : parts) G = reflect(G);
  }
  if (log) *log = std::move(entries);
  return closed_conv_hull_union(parts);
}

GeneratorSet formula_hull(const SupFamily& family, const Vec& x, const Rational& eps, const SGrid& grid,
                          FormulaMode mode, const FormulaOptions& options, std::vector<BranchEntry>* log) {
  if (mode == FormulaMode::ExactAffine) {
    if (!family.all_affine()) {
      throw InputError("exact-affine mode needs every proper member to be a single affine piece on the whole space");
    }
    return affine_hull(family, x, eps, options, log);
  }
  return sampled_hull(family, x, eps, grid, options, log);
}

FormulaResult run_formula(const SupFamily& family, const Vec& x, const Rational& eps, const SGrid& grid,
                          FormulaMode mode, const FormulaOptions& options, const PolyhedronH& truth_set) {
  require_positive(eps);
  family.require_feasible(x);
  FormulaResult r;
  r.epsilon = eps;
  r.grid = grid;
  r.mode = mode;
  r.hull = formula_hull(family, x, eps, grid, mode, options, &r.log);
  r.cone = recession_cone(r.hull);
  if (mode == FormulaMode::ExactAffine) {
    r.exactness = Exactness::Exact;
    r.grid_stable = true;
    return r;
  }
  if (!options.certify) return r;
  const SGrid finer = grid.refined();
  const ConeGen refined_cone = recession_cone(formula_hull(family, x, eps, finer, mode, options, nullptr));
  r.grid_stable = cone_equal(r.cone, refined_cone);
  if (r.grid_stable && cone_equal(r.cone, polyhedron_normal_cone(truth_set, x))) r.exactness = Exactness::Exact;
  return r;
}

}  // namespace

std::vector<std::string> active_index_set(const SupFamily& family, const Vec& x, const Rational& eps, const Rational& s) {
  require_positive(eps);
  if (sgn(s) <= 0) throw InputError("s must be positive, got " + to_string(s));
  family.require_feasible(x);
  std::vector<std::string> ids;
  for (const auto& m : family.members()) {
    const auto* f = std::get_if<PolyhedralFunction>(&m.fn);
    if (!f) continue;
    if (s * f->evaluate(x).value() >= -eps) ids.push_back(m.id);
  }
  return ids;
}

Rational rho_weight(const Rational& ft, const Rational& f, const Rational& eps) {
  if (ft >= f - eps) return Rational(1);
  return -eps / (2 * ft - 2 * f + eps);
}

DomConeResult dom_sup_normal_cone(const SupFamily& family, const Vec& x, const Rational& eps, const AlphaPolicy& policy) {
  require_positive(eps);
  require_dim(x, family.dim(), "query point");
  const ExtendedValue fx = family.evaluate(x);
  if (!fx.is_finite()) throw PreconditionError("f(x) = " + to_string(fx) + " is not finite; x must lie in dom f");
  if (policy.kind == AlphaPolicy::Kind::Explicit) {
    for (const auto& [id, w] : policy.weights) {
      auto it = std::find_if(family.members().begin(), family.members().end(),
                             [&](const FamilyMember& m) { return m.id == id; });
      if (it == family.members().end()) throw InputError("weight given for unknown member '" + id + "'");
      if (!std::holds_alternative<PolyhedralFunction>(it->fn)) throw InputError("weight given for improper member '" + id + "'");
    }
  }
  DomConeResult out;
  std::vector<GeneratorSet> parts;
  for (const auto& m : family.members()) {
    if (const auto* imp = std::get_if<ImproperFunction>(&m.fn)) {
      parts.push_back(eps_normal_set(imp->domain, x, eps));
      continue;
    }
    const auto& f = std::get<PolyhedralFunction>(m.fn);
    const Rational ft = f.evaluate(x).value();
    const Rational rho = rho_weight(ft, fx.value(), eps);
    Rational alpha = rho;
    if (policy.kind == AlphaPolicy::Kind::AllOnes) alpha = 1;
    if (policy.kind == AlphaPolicy::Kind::Explicit) {
      auto it = policy.weights.find(m.id);
      if (it == policy.weights.end()) throw InputError("no weight given for member '" + m.id + "'");
      alpha = it->second;
    }
    if (alpha < rho) {
      throw InputError("weight for member '" + m.id + "' violates alpha_t >= rho_t (" + to_string(alpha) + " < " +
                       to_string(rho) + ")");
    }
    out.weights.emplace_back(m.id, alpha);
    // d_eps(alpha f)(x) = alpha d_{eps/alpha} f(x)
    parts.push_back(eps_subdifferential(f, x, eps / alpha).scaled(alpha));
  }
  out.hull = closed_conv_hull_union(parts);
  out.cone = recession_cone(out.hull);
  return out;
}

FormulaResult sublevel_normal_cone_formula(const SupFamily& family, const Vec& x, const Rational& eps,
                                          const SGrid& grid, FormulaMode mode, const FormulaOptions& options) {
  return run_formula(family, x, eps, grid, mode, options, sup_sublevel_polyhedron(family, Rational(0)));
}

IntersectionResult sublevel_normal_cone_intersection(const SupFamily& family, const Vec& x,
                                                     const std::vector<Rational>& eps_list, const SGrid& grid,
                                                     FormulaMode mode, const FormulaOptions& options) {
  if (eps_list.empty()) throw InputError("epsilon list must not be empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    require_positive(eps_list[i]);
    if (i && !(eps_list[i] < eps_list[i - 1])) throw InputError("epsilon list must be strictly decreasing");
  }
  family.require_feasible(x);
  IntersectionResult r;
  r.epsilons = eps_list;
  r.intersection = PolyhedronH(family.dim());
  std::vector<GeneratorSet> hulls;
  for (const auto& eps : eps_list) {
    hulls.push_back(formula_hull(family, x, eps, grid, mode, options, nullptr));
    r.intersection = r.intersection.intersect(v_to_h(hulls.back()));
  }
  r.cone = recession_cone(r.intersection);
  if (mode == FormulaMode::ExactAffine) {
    bool ok = true;
    for (std::size_t i = 1; i < hulls.size() && ok; ++i) {
      ok = same_set(hulls[i], hulls[i - 1].scaled(eps_list[i] / eps_list[i - 1]));
    }
    r.scaling_consistent = ok;
  }
  return r;
}

FormulaResult singleton_sublevel_normal_cone(const PolyhedralFunction& f, const Vec& x, const Rational& eps,
                                            const SGrid& grid, const FormulaOptions& options) {
  if (!f.is_proper()) throw PreconditionError("f must be proper");
  SupFamily family(f.dim(), {FamilyMember{"f", f}});
  return sublevel_normal_cone_formula(family, x, eps, grid, FormulaMode::Sampled, options);
}

std::optional<Vec> slater_point(const SupFamily& family) {
  const std::size_t n = family.dim();
  // variables (y, delta); maximize delta
  LinearProgram lp(n + 1, true);
  auto row = [&](const Vec& a, const Rational& rhs) {
    Vec c = a;
    c.push_back(Rational(1));
    lp.add_row(std::move(c), LinearProgram::Sense::Le, rhs);
  };
  bool any_proper = false;
  for (const auto& m : family.members()) {
    if (const auto* f = std::get_if<PolyhedralFunction>(&m.fn)) {
      any_proper = true;
      for (const auto& p : f->pieces) row(p.slope, -p.intercept);
    }
    for (const auto& h : domain_of(m.fn).constraints) {
      if (h.is_vacuous()) continue;
      row(h.normal, h.offset);
    }
  }
  if (!any_proper) return std::nullopt;
  Vec cap = zeros(n + 1);
  cap[n] = 1;
  lp.add_row(cap, LinearProgram::Sense::Le, Rational(1));
  lp.objective = cap;
  LpResult res = solve(lp);
  if (!res.optimal() || sgn(res.value) <= 0) return std::nullopt;
  return Vec(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(n));
}

FormulaResult strict_sublevel_normal_cone(const SupFamily& family, const Vec& x, const Rational& eps,
                                         const SGrid& grid, FormulaMode mode, const FormulaOptions& options) {
  if (!slater_point(family)) {
    throw PreconditionError("continuity hypothesis fails: no point where f is continuous and f < 0");
  }
  return sublevel_normal_cone_formula(family, x, eps, grid, mode, options);
}

std::optional<Vec> point_outside(const PolyhedronH& P, const PolyhedronH& Q) {
  auto base = feasible_point(P);
  if (!base) return std::nullopt;
  for (const auto& h : Q.constraints) {
    if (h.is_empty_constraint()) return base;
    if (h.is_vacuous()) continue;
    LpResult r = lp_solve(h.normal, P);
    if (r.optimal()) {
      if (r.value > h.offset) return r.point;
    } else if (r.unbounded()) {
      const Rational slope = dot(h.normal, r.ray);
      const Rational k = (h.offset - dot(h.normal, *base)) / slope + 1;
      return add(*base, scale(k > 0 ? k : Rational(1), r.ray));
    }
  }
  return std::nullopt;
}

ClosureConditionVerdict compare_closure_sides(const PolyhedronH& closure_of_sublevel, const PolyhedronH& hull_side,
                                const PolyhedronH& closure_side) {
  ClosureConditionVerdict v;
  v.closure_of_sublevel = closure_of_sublevel;
  v.hull_side = hull_side;
  v.closure_side = closure_side;
  v.hull_condition = same_set(closure_of_sublevel, hull_side);
  v.member_condition = same_set(closure_of_sublevel, closure_side);
  for (const PolyhedronH* side : {&hull_side, &closure_side}) {
    if (v.witness) break;
    if (auto w = point_outside(*side, closure_of_sublevel)) v.witness = w;
    else if (auto w2 = point_outside(closure_of_sublevel, *side)) v.witness = w2;
  }
  return v;
}

namespace {

void assert_hull_implies_member_condition(const ClosureConditionVerdict& v) {
  if (v.hull_condition && !v.member_condition) throw std::logic_error("hull closure condition holds but member closure condition fails");
}

}  // namespace

ClosureConditionVerdict closure_condition_check(const SupFamily& family) {
  const PolyhedronH sub = sup_sublevel_polyhedron(family, Rational(0));
  if (is_empty(sub)) throw PreconditionError("sublevel set [f <= 0] is empty");
  // Polyhedral members are lsc and [f_t <= 0] is closed; an improper member's
  // hull is -inf on the closed domain.
  PolyhedronH hull_side(family.dim());
  for (const auto& m : family.members()) {
    if (const auto* f = std::get_if<PolyhedralFunction>(&m.fn)) hull_side = hull_side.intersect(sublevel_set(*f, Rational(0)));
    else hull_side = hull_side.intersect(domain_of(m.fn));
  }
  ClosureConditionVerdict v = compare_closure_sides(sub, hull_side, hull_side);
  assert_hull_implies_member_condition(v);
  return v;
}

ClosureConditionVerdict closure_condition_check(const SublevelOracleQC& qc) {
  const std::size_t n = qc.dim();
  // [f <= 0] is cut out by closed and strict inequalities. It is nonempty iff
  // some point meets the strict ones with a positive margin, and then its closure
  // is the system with the strict inequalities relaxed.
  LinearProgram lp(n + 1, true);
  PolyhedronH relaxed(n);
  for (const auto& m : qc.members()) {
    for (const auto& h : m.zero_closure.constraints) {
      const bool is_strict = std::any_of(m.strict.begin(), m.strict.end(), [&](const HalfSpace& s) {
        return s.normal == h.normal && s.offset == h.offset;
      });
      Vec row = h.normal;
      row.push_back(Rational(is_strict ? 1 : 0));
      lp.add_row(std::move(row), LinearProgram::Sense::Le, h.offset);
      relaxed.add(h.normal, h.offset);
    }
  }
  Vec cap = zeros(n + 1);
  cap[n] = 1;
  lp.add_row(cap, LinearProgram::Sense::Le, Rational(1));
  lp.objective = cap;
  LpResult res = solve(lp);
  if (!res.optimal() || sgn(res.value) <= 0) throw PreconditionError("sublevel set [f <= 0] is empty");
  PolyhedronH hull_side(n), closure_side(n);
  for (const auto& m : qc.members()) {
    hull_side = hull_side.intersect(m.hull_zero);
    closure_side = closure_side.intersect(m.zero_closure);
  }
  ClosureConditionVerdict v = compare_closure_sides(relaxed, hull_side, closure_side);
  assert_hull_implies_member_condition(v);
  return v;
}

QcConeResult qc_sublevel_normal_cone(const SublevelOracleQC& qc, const Vec& x, const Rational& eps,
                                     const ClosureEvidence& evidence) {
  require_positive(eps);
  qc.require_feasible(x);
  QcConeResult out;
  switch (evidence.kind) {
    case ClosureEvidence::Kind::None:
      throw RefusedError("closure condition cl[f <= 0] = cap cl[f_t <= 0] not established: no evidence supplied");
    case ClosureEvidence::Kind::Check: {
      ClosureConditionVerdict v = closure_condition_check(qc);
      if (!v.member_condition) {
        throw RefusedError("closure condition fails" +
                           (v.witness ? " (witness " + to_string(*v.witness) + ")" : std::string()));
      }
      out.evidence = "member closure condition verified";
      break;
    }
    case ClosureEvidence::Kind::ContinuityPoint: {
      const Vec& y = *evidence.point;
      require_dim(y, qc.dim(), "continuity point");
      if (!qc.feasible(y)) throw RefusedError("declared continuity point " + to_string(y) + " is not in [f <= 0]");
      for (const auto& m : qc.members()) {
        if (!m.continuous_at(y)) {
          throw RefusedError("member '" + m.id + "' is not continuous at the declared point " + to_string(y));
        }
      }
      out.evidence = "f continuous at " + to_string(y);
      break;
    }
  }
  std::vector<GeneratorSet> parts;
  for (const auto& m : qc.members()) parts.push_back(eps_normal_set(m.zero_closure, x, eps));
  out.hull = closed_conv_hull_union(parts);
  out.cone = recession_cone(out.hull);
  return out;
}

std::vector<Vec> ball_lattice(const Vec& x, const Rational& r, std::size_t per_axis) {
  if (per_axis < 2) throw InputError("lattice needs at least 2 points per axis");
  const std::size_t n = x.size();
  std::vector<Rational> offsets;
  for (std::size_t j = 0; j < per_axis; ++j) {
    offsets.push_back(r * (Rational(2 * static_cast<long>(j), static_cast<long>(per_axis - 1)) - 1));
  }
  std::vector<Vec> pts;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vec y = x;
    for (std::size_t i = 0; i < n; ++i) y[i] += offsets[idx[i]];
    pts.push_back(std::move(y));
    std::size_t k = 0;
    while (k < n && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == n) break;
  }
  std::stable_sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    const Rational da = sup_norm(sub(a, x)), db = sup_norm(sub(b, x));
    if (da != db) return da < db;
    return lex_less(a, b);
  });
  return pts;
}

FrechetResult frechet_outer_cone(const SublevelOracleQC& qc, const Vec& x, const Rational& eps, std::size_t per_axis) {
  require_positive(eps);
  qc.require_feasible(x);
  FrechetResult out;
  ConeGen C(qc.dim());
  const ExtendedValue level(eps);
  for (const auto& y : ball_lattice(x, eps, per_axis)) {
    ++out.samples;
    for (const auto& m : qc.members()) {
      if (!(m.evaluate(y) <= level)) continue;
      auto grads = m.gradients(y);
      if (grads.empty()) {
        ++out.skipped;
        continue;
      }
      for (auto& g : grads) {
        if (is_zero(g)) continue;
        ++out.contributing;
        C.rays.push_back(primitive(g));
      }
    }
  }
  std::sort(C.rays.begin(), C.rays.end(), lex_less);
  C.rays.erase(std::unique(C.rays.begin(), C.rays.end()), C.rays.end());
  out.cone = canonicalize(C);
  return out;
}

namespace {

struct WitnessFunction {
  const WitnessTarget& target;

  ExtendedValue value(const Vec& y) const {
    if (const auto* m = std::get_if<QCMember>(&target)) return m->evaluate(y);
    return std::get<PolyhedralFunction>(target).evaluate(y);
  }

  PolyhedronH zero_sublevel() const {
    if (const auto* m = std::get_if<QCMember>(&target)) return m->zero_closure;
    return sublevel_set(std::get<PolyhedralFunction>(target), Rational(0));
  }

  bool contains_zero(const Vec& x) const {
    if (const auto* m = std::get_if<QCMember>(&target)) return m->in_zero_sublevel(x);
    const ExtendedValue v = value(x);
    return v.is_finite() && sgn(v.value()) <= 0;
  }

  // Subgradient candidates at y: gradients, or the slopes of the active pieces.
  std::vector<Vec> subgradients(const Vec& y) const {
    if (const auto* m = std::get_if<QCMember>(&target)) return m->gradients(y);
    const auto& f = std::get<PolyhedralFunction>(target);
    const ExtendedValue v = f.evaluate(y);
    if (!v.is_finite()) return {};
    std::vector<Vec> out;
    for (const auto& p : f.pieces) {
      if (p(y) == v.value()) out.push_back(p.slope);
    }
    return out;
  }
};

// min |g - lambda u|_inf over lambda >= 0, as an exact LP in (lambda, t).
std::pair<Rational, Rational> closest_multiple(const Vec& g, const Vec& u) {
  LinearProgram lp(2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    lp.add_row(Vec{-u[i], Rational(-1)}, LinearProgram::Sense::Le, -g[i]);  // g_i - lambda u_i <= t
    lp.add_row(Vec{u[i], Rational(-1)}, LinearProgram::Sense::Le, g[i]);    // lambda u_i - g_i <= t
  }
  lp.objective = Vec{Rational(0), Rational(-1)};
  LpResult r = solve(lp);
  if (!r.optimal()) throw std::logic_error("closest-multiple LP is always solvable");
  return {r.point[0], r.point[1]};
}

}  // namespace

WitnessReport subgradient_witness_search(const WitnessTarget& target, const Vec& x, const Rational& eps, std::size_t per_axis) {
  auto root = exact_sqrt(eps);
  if (!root || sgn(eps) <= 0) throw InputError("epsilon " + to_string(eps) + " is not the square of a positive rational");
  if (const auto* m = std::get_if<QCMember>(&target)) {
    if (m->kind == QCMember::Kind::Composite && !m->g->is_lsc()) throw PreconditionError("member must be lsc");
  }
  WitnessFunction f{target};
  if (!f.contains_zero(x)) throw PreconditionError("x = " + to_string(x) + " is not in [f <= 0]");
  WitnessReport report;
  report.sqrt_eps = *root;
  const Rational radius = 3 * *root;
  const ExtendedValue level(2 * *root);

  GeneratorSet N = eps_normal_set(f.zero_sublevel(), x, eps);
  N.normalize();
  std::vector<std::pair<Vec, std::vector<Vec>>> candidates;
  for (const auto& y : ball_lattice(x, radius, per_axis)) {
    if (!(f.value(y) <= level)) continue;
    auto us = f.subgradients(y);
    if (!us.empty()) candidates.emplace_back(y, std::move(us));
  }

  auto search_point = [&](const Vec& g) -> std::optional<SubgradientWitness> {
    for (const auto& [y, us] : candidates) {
      for (const auto& u : us) {
        auto [lambda, dist] = closest_multiple(g, u);
        if (dist <= *root) return SubgradientWitness{y, lambda, u, sub(g, scale(lambda, u))};
      }
    }
    return std::nullopt;
  };
  auto search_ray = [&](const Vec& g) -> std::optional<SubgradientWitness> {
    const Vec pg = primitive(g);
    for (const auto& [y, us] : candidates) {
      for (const auto& u : us) {
        if (is_zero(u) || primitive(u) != pg) continue;
        std::size_t i = 0;
        while (sgn(u[i]) == 0) ++i;
        return SubgradientWitness{y, g[i] / u[i], u, zeros(g.size())};
      }
    }
    return std::nullopt;
  };

  for (const auto& p : N.points) {
    WitnessEntry e{false, p, search_point(p)};
    if (!e.witness) ++report.not_found;
    report.entries.push_back(std::move(e));
  }
  for (const auto& r : N.rays) {
    WitnessEntry e{true, r, search_ray(r)};
    if (!e.witness) ++report.not_found;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace snc
