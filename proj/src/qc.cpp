#include "snc/qc.hpp"

#include <set>

namespace snc {

void SmoothQCMember::validate() const {
  if (is_zero(a)) throw InputError("smooth member direction a must be nonzero");
  if (direction != 1 && direction != -1) throw InputError("smooth member direction must be +1 or -1");
  const int mono = monotonicity(p);
  if (mono == 0) throw InputError("polynomial " + p.to_string() + " is not strictly monotone on R");
  if (mono != direction) {
    throw InputError("polynomial " + p.to_string() + " is " + (mono > 0 ? "increasing" : "decreasing") +
                     ", not " + (direction > 0 ? "increasing" : "decreasing") + " as declared");
  }
  if (sgn(p(root)) != 0) throw InputError("declared root " + to_string(root) + " is not a root of " + p.to_string());
}

PolyhedronH SmoothQCMember::zero_sublevel() const {
  PolyhedronH h(a.size());
  if (direction > 0) h.add(a, root - b);  // <a,x> + b <= root
  else h.add(negate(a), b - root);        // <a,x> + b >= root
  return h;
}

namespace {

struct Bound {
  HalfSpace h;
  bool strict;
};

// {x : <a,x> + b in I}
std::vector<Bound> interval_constraints(const Interval& I, const Vec& a, const Rational& b) {
  std::vector<Bound> out;
  if (I.lo) out.push_back({HalfSpace{negate(a), b - *I.lo}, !I.lo_closed});
  if (I.hi) out.push_back({HalfSpace{a, *I.hi - b}, !I.hi_closed});
  return out;
}

bool strictly_inside(const PolyhedronH& P, const Vec& x) {
  for (const auto& h : P.constraints) {
    if (h.is_vacuous()) continue;
    if (!(dot(h.normal, x) < h.offset)) return false;
  }
  return true;
}

std::vector<Rational> sample_values(std::size_t n) {
  if (n <= 3) return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  if (n == 4) return {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
  return {Rational(-1), Rational(0), Rational(1)};
}

std::vector<Vec> sample_lattice(std::size_t n) {
  std::vector<Vec> pts;
  if (n > 6) {
    pts.push_back(zeros(n));
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(unit(n, i));
      pts.push_back(negate(unit(n, i)));
    }
    return pts;
  }
  const auto vals = sample_values(n);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = vals[idx[i]];
    pts.push_back(std::move(p));
    std::size_t k = 0;
    while (k < n && ++idx[k] == vals.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return pts;
}

}  // namespace

QCMember QCMember::sublevel(std::string id, PolyhedronH zero) {
  QCMember m;
  m.id = std::move(id);
  m.kind = Kind::Sublevel;
  m.zero_closure = zero;
  m.hull_zero = std::move(zero);
  return m;
}

QCMember QCMember::composite(std::string id, QuasiConvex1D g, Vec a, Rational b) {
  QCMember m;
  m.id = std::move(id);
  m.kind = Kind::Composite;
  const std::size_t n = a.size();
  m.zero_closure = PolyhedronH(n);
  m.hull_zero = PolyhedronH(n);
  if (auto I = g.sublevel(Rational(0))) {
    for (auto& c : interval_constraints(*I, a, b)) {
      m.zero_closure.add(c.h.normal, c.h.offset);
      if (c.strict) m.strict.push_back(c.h);
    }
  } else {
    m.zero_closure = PolyhedronH::empty_set(n);
  }
  if (auto J = g.closed_hull().sublevel(Rational(0))) {
    for (auto& c : interval_constraints(J->closure(), a, b)) m.hull_zero.add(c.h.normal, c.h.offset);
  } else {
    m.hull_zero = PolyhedronH::empty_set(n);
  }
  m.g = std::move(g);
  m.a = std::move(a);
  m.b = std::move(b);
  return m;
}

QCMember QCMember::from_smooth(std::string id, SmoothQCMember s) {
  s.validate();
  QCMember m;
  m.id = std::move(id);
  m.kind = Kind::Smooth;
  m.zero_closure = s.zero_sublevel();
  m.hull_zero = m.zero_closure;
  m.smooth = std::move(s);
  return m;
}

ExtendedValue QCMember::evaluate(const Vec& x) const {
  require_dim(x, dim(), "evaluation point");
  switch (kind) {
    case Kind::Sublevel:
      return ExtendedValue(Rational(zero_closure.contains(x) ? 0 : 1));
    case Kind::Composite:
      return g->evaluate(dot(a, x) + b);
    case Kind::Smooth:
      return ExtendedValue(smooth->evaluate(x));
  }
  return ExtendedValue::pos_inf();
}

bool QCMember::in_zero_sublevel(const Vec& x) const {
  if (!zero_closure.contains(x)) return false;
  for (const auto& h : strict) {
    if (!(dot(h.normal, x) < h.offset)) return false;
  }
  return true;
}

bool QCMember::continuous_at(const Vec& x) const {
  switch (kind) {
    case Kind::Sublevel:
      return strictly_inside(zero_closure, x) || !zero_closure.contains(x);
    case Kind::Smooth:
      return true;
    case Kind::Composite: {
      if (is_zero(a)) return true;
      const Rational u = dot(a, x) + b;
      const auto& bps = g->breakpoints();
      for (std::size_t k = 0; k < bps.size(); ++k) {
        if (bps[k] != u) continue;
        const auto& left = g->pieces()[k];
        const auto& right = g->pieces()[k + 1];
        const ExtendedValue lv = left ? ExtendedValue((*left)(u)) : ExtendedValue::pos_inf();
        const ExtendedValue rv = right ? ExtendedValue((*right)(u)) : ExtendedValue::pos_inf();
        return lv == g->values()[k] && rv == g->values()[k];
      }
      return true;
    }
  }
  return false;
}

std::vector<Vec> QCMember::gradients(const Vec& x) const {
  const std::size_t n = dim();
  switch (kind) {
    case Kind::Smooth:
      return {smooth->gradient(x)};
    case Kind::Composite: {
      if (is_zero(a)) return {zeros(n)};
      auto d = g->derivative(dot(a, x) + b);
      if (!d) return {};
      return {scale(*d, a)};
    }
    case Kind::Sublevel:
      if (strictly_inside(zero_closure, x) || !zero_closure.contains(x)) return {zeros(n)};
      return {};
  }
  return {};
}

std::string to_string(QCMember::Kind k) {
  switch (k) {
    case QCMember::Kind::Sublevel: return "qc-sublevel";
    case QCMember::Kind::Composite: return "qc-composite";
    case QCMember::Kind::Smooth: return "smooth-qc";
  }
  return "?";
}

std::string to_string(ClosureEvidence::Kind k) {
  switch (k) {
    case ClosureEvidence::Kind::None: return "none";
    case ClosureEvidence::Kind::Check: return "check";
    case ClosureEvidence::Kind::ContinuityPoint: return "continuity-point";
  }
  return "?";
}

SublevelOracleQC::SublevelOracleQC(std::size_t dim, std::vector<QCMember> members)
    : dim_(dim), members_(std::move(members)) {
  if (dim_ == 0) throw InputError("family dimension must be positive");
  if (members_.empty()) throw InputError("quasi-convex family needs at least one member");
  std::set<std::string> seen;
  for (const auto& m : members_) {
    if (m.id.empty()) throw InputError("member id must not be empty");
    if (!seen.insert(m.id).second) throw InputError("duplicate member id '" + m.id + "'");
    if (m.dim() != dim_) throw InputError("member '" + m.id + "' has the wrong dimension");
  }
  const auto lattice = sample_lattice(dim_);
  for (const auto& m : members_) {
    for (const auto& y : lattice) {
      const ExtendedValue v = m.evaluate(y);
      const bool by_value = v <= ExtendedValue(Rational(0));
      if (by_value != m.in_zero_sublevel(y)) {
        throw InputError("zero sublevel of member '" + m.id + "' disagrees with its evaluator at " + to_string(y));
      }
    }
  }
}

ExtendedValue SublevelOracleQC::evaluate(const Vec& x) const {
  ExtendedValue best = ExtendedValue::neg_inf();
  for (const auto& m : members_) best = std::max(best, m.evaluate(x));
  return best;
}

bool SublevelOracleQC::feasible(const Vec& x) const {
  for (const auto& m : members_) {
    if (!m.in_zero_sublevel(x)) return false;
  }
  return evaluate(x).is_finite();
}

void SublevelOracleQC::require_feasible(const Vec& x) const {
  require_dim(x, dim_, "query point");
  if (!feasible(x)) throw PreconditionError("x = " + to_string(x) + " is not in [f <= 0] with f(x) finite");
}

bool SublevelOracleQC::all_smooth_or_composite() const {
  for (const auto& m : members_) {
    if (m.kind == QCMember::Kind::Sublevel) return false;
  }
  return true;
}

}  // namespace snc
