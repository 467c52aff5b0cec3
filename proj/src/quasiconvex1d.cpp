#include "snc/quasiconvex1d.hpp"

#include <algorithm>

namespace snc {

bool Interval::empty() const {
  if (!lo || !hi) return false;
  if (*lo > *hi) return true;
  return *lo == *hi && !(lo_closed && hi_closed);
}

bool Interval::contains(const Rational& u) const {
  if (lo && (u < *lo || (u == *lo && !lo_closed))) return false;
  if (hi && (u > *hi || (u == *hi && !hi_closed))) return false;
  return true;
}

Interval Interval::closure() const {
  Interval c = *this;
  c.lo_closed = lo.has_value();
  c.hi_closed = hi.has_value();
  return c;
}

std::string to_string(const Interval& I) {
  if (I.empty()) return "{}";
  std::string s = I.lo ? (I.lo_closed ? "[" : "(") + snc::to_string(*I.lo) : "(-inf";
  s += ", ";
  s += I.hi ? snc::to_string(*I.hi) + (I.hi_closed ? "]" : ")") : "+inf)";
  return s;
}

namespace {

// Lower endpoint ordering: -inf first, then by value, closed before open.
bool lower_before(const Interval& a, const Interval& b) {
  if (!a.lo || !b.lo) return !a.lo && b.lo;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (!a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else if (!b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (*a.lo != *b.lo) {
    const Interval& m = *a.lo > *b.lo ? a : b;
    r.lo = m.lo;
    r.lo_closed = m.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (!a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else if (!b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (*a.hi != *b.hi) {
    const Interval& m = *a.hi < *b.hi ? a : b;
    r.hi = m.hi;
    r.hi_closed = m.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

}  // namespace

std::vector<Interval> merge_intervals(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& I) { return I.empty(); });
  std::sort(parts.begin(), parts.end(), lower_before);
  std::vector<Interval> out;
  for (const auto& p : parts) {
    if (!out.empty()) {
      Interval& c = out.back();
      const bool touches = !c.hi || !p.lo || *p.lo < *c.hi || (*p.lo == *c.hi && (p.lo_closed || c.hi_closed));
      if (touches) {
        if (!c.hi) continue;
        if (!p.hi) {
          c.hi.reset();
          c.hi_closed = false;
        } else if (*p.hi > *c.hi) {
          c.hi = p.hi;
          c.hi_closed = p.hi_closed;
        } else if (*p.hi == *c.hi) {
          c.hi_closed = c.hi_closed || p.hi_closed;
        }
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

QuasiConvex1D QuasiConvex1D::create(std::vector<Rational> breakpoints, std::vector<std::optional<AffinePiece1D>> pieces,
                                    std::vector<ExtendedValue> values) {
  if (pieces.size() != breakpoints.size() + 1) {
    throw InputError("quasi-convex 1-D function: expected " + std::to_string(breakpoints.size() + 1) +
                     " cell pieces, got " + std::to_string(pieces.size()));
  }
  if (values.size() != breakpoints.size()) {
    throw InputError("quasi-convex 1-D function: expected one value per breakpoint");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) throw InputError("breakpoints must be strictly increasing");
  }
  for (const auto& v : values) {
    if (v.is_neg_inf()) throw InputError("breakpoint value -inf is not supported");
  }
  QuasiConvex1D f;
  f.breakpoints_ = std::move(breakpoints);
  f.pieces_ = std::move(pieces);
  f.values_ = std::move(values);

  std::vector<Rational> levels;
  for (const auto& v : f.critical_levels()) levels.push_back(v.value());
  std::vector<Rational> tests;
  if (levels.empty()) {
    tests.push_back(Rational(0));
  } else {
    tests.push_back(levels.front() - 1);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      tests.push_back(levels[i]);
      if (i + 1 < levels.size()) tests.push_back((levels[i] + levels[i + 1]) / 2);
    }
    tests.push_back(levels.back() + 1);
  }
  for (const auto& c : tests) {
    if (f.sublevel_components(c).size() > 1) {
      throw InputError("function is not quasi-convex: sublevel set at level " + to_string(c) +
                       " is not an interval");
    }
  }
  return f;
}

std::vector<ExtendedValue> QuasiConvex1D::critical_levels() const {
  std::vector<ExtendedValue> out;
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    for (const auto& v : {values_[k], left_limit(k), right_limit(k)}) {
      if (v.is_finite()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtendedValue QuasiConvex1D::left_limit(std::size_t k) const {
  const auto& p = pieces_[k];
  return p ? ExtendedValue((*p)(breakpoints_[k])) : ExtendedValue::pos_inf();
}

ExtendedValue QuasiConvex1D::right_limit(std::size_t k) const {
  const auto& p = pieces_[k + 1];
  return p ? ExtendedValue((*p)(breakpoints_[k])) : ExtendedValue::pos_inf();
}

ExtendedValue QuasiConvex1D::evaluate(const Rational& u) const {
  std::size_t cell = 0;
  for (; cell < breakpoints_.size(); ++cell) {
    if (u == breakpoints_[cell]) return values_[cell];
    if (u < breakpoints_[cell]) break;
  }
  const auto& p = pieces_[cell];
  return p ? ExtendedValue((*p)(u)) : ExtendedValue::pos_inf();
}

std::optional<Rational> QuasiConvex1D::derivative(const Rational& u) const {
  std::size_t cell = 0;
  for (; cell < breakpoints_.size(); ++cell) {
    if (u == breakpoints_[cell]) return std::nullopt;
    if (u < breakpoints_[cell]) break;
  }
  const auto& p = pieces_[cell];
  if (!p) return std::nullopt;
  return p->slope;
}

std::vector<Interval> QuasiConvex1D::sublevel_components(const Rational& c) const {
  std::vector<Interval> parts;
  const std::size_t m = breakpoints_.size();
  for (std::size_t j = 0; j <= m; ++j) {
    const auto& p = pieces_[j];
    if (!p) continue;
    Interval cell;
    if (j > 0) cell.lo = breakpoints_[j - 1];
    if (j < m) cell.hi = breakpoints_[j];
    Interval half;
    const int s = sgn(p->slope);
    if (s == 0) {
      if (p->intercept <= c) parts.push_back(cell);
      continue;
    }
    const Rational t = (c - p->intercept) / p->slope;
    if (s > 0) {
      half.hi = t;
      half.hi_closed = true;
    } else {
      half.lo = t;
      half.lo_closed = true;
    }
    parts.push_back(intersect(cell, half));
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (values_[k].is_finite() && values_[k].value() <= c) parts.push_back(Interval::point(breakpoints_[k]));
  }
  return merge_intervals(std::move(parts));
}

std::optional<Interval> QuasiConvex1D::sublevel(const Rational& c) const {
  auto comps = sublevel_components(c);
  if (comps.empty()) return std::nullopt;
  return comps.front();
}

QuasiConvex1D QuasiConvex1D::closed_hull() const {
  QuasiConvex1D g = *this;
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    g.values_[k] = std::min({values_[k], left_limit(k), right_limit(k)});
  }
  return g;
}

bool QuasiConvex1D::is_lsc() const { return closed_hull().values_ == values_; }

ClosureVerdict sublevel_closure_identity(const QuasiConvex1D& f) {
  auto s = f.sublevel(Rational(0));
  if (!s) throw PreconditionError("sublevel set [f <= 0] is empty");
  ClosureVerdict v;
  v.closure_of_sublevel = s->closure();
  auto h = f.closed_hull().sublevel(Rational(0));
  v.sublevel_of_hull = *h;  // contains [f <= 0], hence nonempty
  v.holds = v.closure_of_sublevel == v.sublevel_of_hull;
  if (!v.holds) {
    std::vector<Rational> ends;
    for (const Interval* I : {&v.closure_of_sublevel, &v.sublevel_of_hull}) {
      if (I->lo) ends.push_back(*I->lo);
      if (I->hi) ends.push_back(*I->hi);
    }
    std::sort(ends.begin(), ends.end());
    std::vector<Rational> candidates;
    for (std::size_t i = 0; i < ends.size(); ++i) {
      candidates.push_back(ends[i]);
      candidates.push_back(ends[i] - 1);
      candidates.push_back(ends[i] + 1);
      if (i + 1 < ends.size()) candidates.push_back((ends[i] + ends[i + 1]) / 2);
    }
    for (const auto& u : candidates) {
      if (v.closure_of_sublevel.contains(u) != v.sublevel_of_hull.contains(u)) {
        v.witness = u;
        break;
      }
    }
  }
  return v;
}

}  // namespace snc
