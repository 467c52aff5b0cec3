#include "snc/functions.hpp"

namespace snc {

namespace {

void require_nonnegative(const Rational& eps) {
  if (sgn(eps) < 0) throw InputError("epsilon must be nonnegative, got " + to_string(eps));
}

}  // namespace

PolyhedralFunction::PolyhedralFunction(std::vector<AffinePiece> ps, PolyhedronH dom)
    : pieces(std::move(ps)), domain(std::move(dom)) {
  if (pieces.empty()) throw InputError("polyhedral function needs at least one affine piece");
  for (const auto& p : pieces) require_dim(p.slope, domain.dim, "piece slope");
}

PolyhedralFunction PolyhedralFunction::affine(Vec slope, Rational intercept) {
  const std::size_t n = slope.size();
  return PolyhedralFunction({AffinePiece{std::move(slope), std::move(intercept)}}, PolyhedronH::whole_space(n));
}

PolyhedralFunction PolyhedralFunction::max_affine(std::vector<AffinePiece> ps) {
  if (ps.empty()) throw InputError("max-affine function needs at least one piece");
  const std::size_t n = ps.front().slope.size();
  return PolyhedralFunction(std::move(ps), PolyhedronH::whole_space(n));
}

PolyhedralFunction PolyhedralFunction::indicator(const PolyhedronH& D) {
  return PolyhedralFunction({AffinePiece{zeros(D.dim), Rational(0)}}, D);
}

ExtendedValue PolyhedralFunction::evaluate(const Vec& x) const {
  require_dim(x, dim(), "evaluation point");
  if (!domain.contains(x)) return ExtendedValue::pos_inf();
  Rational best = pieces.front()(x);
  for (const auto& p : pieces) {
    Rational v = p(x);
    if (v > best) best = v;
  }
  return ExtendedValue(best);
}

bool PolyhedralFunction::is_affine_full_domain() const {
  if (pieces.size() != 1) return false;
  for (const auto& h : domain.constraints) {
    if (!h.is_vacuous()) return false;
  }
  return true;
}

PolyhedralFunction PolyhedralFunction::scaled(const Rational& s) const {
  if (sgn(s) <= 0) throw InputError("scaling factor must be positive");
  PolyhedralFunction g = *this;
  for (auto& p : g.pieces) {
    p.slope = scale(s, p.slope);
    p.intercept *= s;
  }
  return g;
}

PolyhedronH PolyhedralFunction::epigraph() const {
  const std::size_t n = dim();
  PolyhedronH epi(n + 1);
  for (const auto& p : pieces) {
    Vec row = p.slope;
    row.push_back(Rational(-1));
    epi.add(std::move(row), -p.intercept);
  }
  for (const auto& h : domain.constraints) {
    Vec row = h.normal;
    row.push_back(Rational(0));
    epi.add(std::move(row), h.offset);
  }
  return epi;
}

ExtendedValue evaluate(const ExtendedFunction& f, const Vec& x) {
  if (const auto* p = std::get_if<PolyhedralFunction>(&f)) return p->evaluate(x);
  const auto& imp = std::get<ImproperFunction>(f);
  require_dim(x, imp.dim(), "evaluation point");
  return imp.domain.contains(x) ? ExtendedValue::neg_inf() : ExtendedValue::pos_inf();
}

std::size_t dim_of(const ExtendedFunction& f) {
  return std::visit([](const auto& g) { return g.dim(); }, f);
}

const PolyhedronH& domain_of(const ExtendedFunction& f) {
  return std::visit([](const auto& g) -> const PolyhedronH& { return g.domain; }, f);
}

bool is_proper(const ExtendedFunction& f) {
  const auto* p = std::get_if<PolyhedralFunction>(&f);
  return p != nullptr && p->is_proper();
}

PolyhedronH sublevel_set(const PolyhedralFunction& f, const Rational& c) {
  PolyhedronH s = f.domain;
  for (const auto& p : f.pieces) s.add(p.slope, c - p.intercept);
  return s;
}

bool sublevel_closure_identity(const PolyhedralFunction& f) {
  if (is_empty(sublevel_set(f, Rational(0)))) throw PreconditionError("sublevel set [f <= 0] is empty");
  return true;
}

SubdifferentialAt::SubdifferentialAt(const PolyhedralFunction& f, Vec x)
    : dim_(f.dim()), x_(std::move(x)), fx_(f.evaluate(x_)), epi_(f.dim() + 1) {
  if (fx_.is_finite()) epi_ = h_to_v(f.epigraph());
}

PolyhedronH SubdifferentialAt::h_description(const Rational& eps) const {
  require_nonnegative(eps);
  if (!fx_.is_finite()) return PolyhedronH::empty_set(dim_);
  PolyhedronH h(dim_);
  for (const auto& v : epi_.points) {
    Vec y(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim_));
    // <x*, y_k - x> <= r_k - f(x) + eps
    h.add(sub(y, x_), v[dim_] - fx_.value() + eps);
  }
  for (const auto& w : epi_.rays) {
    Vec dir(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(dim_));
    // <x*, w> <= rho
    h.add(std::move(dir), w[dim_]);
  }
  return h;
}

GeneratorSet SubdifferentialAt::at(const Rational& eps) const { return h_to_v(h_description(eps)); }

GeneratorSet eps_subdifferential(const PolyhedralFunction& f, const Vec& x, const Rational& eps) {
  require_nonnegative(eps);
  return SubdifferentialAt(f, x).at(eps);
}

GeneratorSet eps_normal_set(const PolyhedronH& D, const Vec& x, const Rational& eps) {
  require_nonnegative(eps);
  require_dim(x, D.dim, "point");
  if (!D.contains(x)) return GeneratorSet(D.dim);
  GeneratorSet v = h_to_v(D);
  PolyhedronH h(D.dim);
  for (const auto& p : v.points) h.add(sub(p, x), eps);
  for (const auto& r : v.rays) h.add(r, Rational(0));
  return h_to_v(h);
}

}  // namespace snc
