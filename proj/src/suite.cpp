#include "snc/suite.hpp"

#include "snc/oracle.hpp"

namespace snc {

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::integer: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long lo, long hi, long den) { return make_rational(integer(lo * den, hi * den), den); }

Vec Rng::integer_vec(std::size_t n, long lo, long hi) {
  Vec v(n);
  for (auto& c : v) c = integer(lo, hi);
  return v;
}

Vec Rng::nonzero_vec(std::size_t n, long lo, long hi) {
  for (;;) {
    Vec v = integer_vec(n, lo, hi);
    if (!is_zero(v)) return v;
  }
}

namespace {

std::string member_id(std::size_t t) { return "f" + std::to_string(t + 1); }

// Half-spaces through or around x: tight ones pass through x.
PolyhedronH domain_around(Rng& rng, const Vec& x, long count, bool allow_tight) {
  PolyhedronH D(x.size());
  for (long i = 0; i < count; ++i) {
    Vec d = rng.nonzero_vec(x.size(), -2, 2);
    const bool tight = allow_tight && rng.chance(1, 2);
    D.add(d, dot(d, x) + (tight ? Rational(0) : Rational(rng.integer(1, 2))));
  }
  return D;
}

// Piece with value -slack at x.
AffinePiece piece_at(const Vec& slope, const Vec& x, const Rational& slack) {
  return {slope, -dot(slope, x) - slack};
}

FormulaInstance make_instance(const std::string& id, Target target, Constraints cs, Vec x, FormulaMode mode) {
  FormulaInstance in;
  in.id = id;
  in.target = target;
  in.constraints = std::move(cs);
  in.x = std::move(x);
  in.mode = mode;
  return in;
}

}  // namespace

FormulaInstance gen_affine_instance(Rng& rng, const std::string& id, std::size_t dim, std::size_t count) {
  const std::size_t n = dim ? dim : static_cast<std::size_t>(rng.integer(2, 4));
  const long drawn = rng.integer(1, 8);
  const long m = count ? static_cast<long>(count) : drawn;
  const bool boundary = rng.chance(1, 2);
  Vec x = rng.integer_vec(n, -2, 2);
  std::vector<FamilyMember> members;
  bool any_tight = false;
  for (long t = 0; t < m; ++t) {
    const bool tight = boundary && (rng.chance(1, 2) || (t == m - 1 && !any_tight));
    any_tight = any_tight || tight;
    Vec a = rng.integer_vec(n, -3, 3);
    Rational slack = tight ? Rational(0) : rng.rational(1, 3, 2);
    members.push_back({member_id(members.size()), PolyhedralFunction({piece_at(a, x, slack)}, PolyhedronH(n))});
  }
  if (rng.chance(1, 5) && count == 0) {
    members.push_back({member_id(members.size()), ImproperFunction{domain_around(rng, x, rng.integer(1, 2), boundary)}});
  }
  return make_instance(id, Target::Sublevel, SupFamily(n, std::move(members)), std::move(x), FormulaMode::ExactAffine);
}

FormulaInstance gen_max_affine_instance(Rng& rng, const std::string& id, std::size_t dim, std::size_t count) {
  const std::size_t n = dim ? dim : static_cast<std::size_t>(rng.integer(2, 3));
  const long drawn = rng.integer(1, 3);
  const long m = count ? static_cast<long>(count) : drawn;
  const bool boundary = rng.chance(3, 4);
  Vec x = rng.integer_vec(n, -2, 2);
  std::vector<FamilyMember> members;
  for (long t = 0; t < m; ++t) {
    std::vector<AffinePiece> pieces;
    const long k = rng.integer(1, 4);
    for (long i = 0; i < k; ++i) {
      const bool tight = boundary && rng.chance(1, 2);
      pieces.push_back(piece_at(rng.integer_vec(n, -3, 3), x, tight ? Rational(0) : rng.rational(1, 2, 2)));
    }
    members.push_back({member_id(members.size()), PolyhedralFunction::max_affine(std::move(pieces))});
  }
  if (rng.chance(1, 5) && count == 0) {
    members.push_back({member_id(members.size()), ImproperFunction{domain_around(rng, x, 1, boundary)}});
  }
  return make_instance(id, Target::Sublevel, SupFamily(n, std::move(members)), std::move(x), FormulaMode::Sampled);
}

FormulaInstance gen_dom_instance(Rng& rng, const std::string& id, std::size_t dim) {
  const std::size_t n = dim ? dim : static_cast<std::size_t>(rng.integer(2, 3));
  Vec x = rng.integer_vec(n, -2, 2);
  std::vector<FamilyMember> members;
  const long proper = rng.integer(1, 4);
  for (long t = 0; t < proper; ++t) {
    std::vector<AffinePiece> pieces;
    const long k = rng.integer(1, 3);
    for (long i = 0; i < k; ++i) pieces.push_back(piece_at(rng.integer_vec(n, -3, 3), x, Rational(rng.integer(-3, 3))));
    members.push_back({member_id(members.size()), PolyhedralFunction(std::move(pieces), domain_around(rng, x, rng.integer(0, 2), true))});
  }
  const long improper = rng.integer(1, 2);
  for (long t = 0; t < improper; ++t) {
    members.push_back({member_id(members.size()), ImproperFunction{domain_around(rng, x, rng.integer(1, 2), true)}});
  }
  return make_instance(id, Target::Dom, SupFamily(n, std::move(members)), std::move(x), FormulaMode::Sampled);
}

namespace {

using P1 = std::optional<AffinePiece1D>;

AffinePiece1D lin(long slope, long intercept) { return {Rational(slope), Rational(intercept)}; }
AffinePiece1D con(long c) { return lin(0, c); }

struct CompositeShape {
  QuasiConvex1D g;
  std::vector<Rational> closed_ends;  // endpoints of [g <= 0] that belong to it
  Rational inside;                    // a point strictly inside [g <= 0]
};

std::vector<CompositeShape> composite_shapes() {
  const ExtendedValue inf = ExtendedValue::pos_inf();
  std::vector<CompositeShape> out;
  out.push_back({QuasiConvex1D::create({Rational(0)}, {P1{lin(1, 0)}, P1{lin(1, 0)}}, {ExtendedValue(Rational(0))}),
                 {Rational(0)}, Rational(-1)});
  out.push_back({QuasiConvex1D::create({Rational(0)}, {P1{con(-1)}, P1{con(1)}}, {ExtendedValue(Rational(0))}),
                 {Rational(0)}, Rational(-1)});
  out.push_back({QuasiConvex1D::create({Rational(0)}, {P1{con(-1)}, P1{}}, {inf}), {}, Rational(-1)});
  out.push_back({QuasiConvex1D::create({Rational(0)}, {P1{lin(-1, 0)}, P1{lin(1, -1)}}, {ExtendedValue(Rational(0))}),
                 {Rational(0), Rational(1)}, Rational(1, 2)});
  out.push_back({QuasiConvex1D::create({Rational(-1), Rational(1)}, {P1{}, P1{con(-1)}, P1{}},
                                       {ExtendedValue(Rational(0)), inf}),
                 {Rational(-1)}, Rational(0)});
  return out;
}

struct SmoothShape {
  Polynomial p;
  int direction;
  Rational root;
};

std::vector<SmoothShape> smooth_shapes() {
  auto P = [](std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
  };
  return {
      {P({0, 0, 0, 1}), 1, Rational(0)},          // u^3
      {P({0, 1, 0, 1}), 1, Rational(0)},          // u^3 + u
      {P({-1, 1}), 1, Rational(1)},               // u - 1
      {P({-4, 2, 0, 1, 0, 1}), 1, Rational(1)},   // u^5 + u^3 + 2u - 4
      {P({0, 0, 0, -1}), -1, Rational(0)},        // -u^3
      {P({1, -2}), -1, Rational(1, 2)},           // 1 - 2u
      {P({-8, 0, 0, 1}), 1, Rational(2)},         // u^3 - 8
  };
}

// Smooth member with inner(x) = root, or inner(x) on the feasible side at distance slack.
SmoothQCMember smooth_member(const SmoothShape& s, Vec a, const Vec& x, const Rational& slack) {
  Rational b = s.root - dot(a, x) - Rational(s.direction) * slack;
  return SmoothQCMember{std::move(a), b, s.p, s.direction, s.root};
}

}  // namespace

FormulaInstance gen_qc_instance(Rng& rng, const std::string& id, std::size_t dim, std::size_t count) {
  const std::size_t n = dim ? dim : static_cast<std::size_t>(rng.integer(2, 3));
  const long drawn = rng.integer(1, 4);
  const long m = count ? static_cast<long>(count) : drawn;
  Vec x = rng.integer_vec(n, -2, 2);
  const auto shapes = composite_shapes();
  const auto smooth = smooth_shapes();
  std::vector<QCMember> members;
  for (long t = 0; t < m; ++t) {
    const std::string mid = member_id(members.size());
    switch (rng.integer(0, 2)) {
      case 0:
        members.push_back(QCMember::sublevel(mid, domain_around(rng, x, rng.integer(1, 3), true)));
        break;
      case 1: {
        const CompositeShape& s = rng.pick(shapes);
        Vec a = rng.nonzero_vec(n, -2, 2);
        const bool tight = !s.closed_ends.empty() && rng.chance(1, 2);
        Rational u0 = tight ? rng.pick(s.closed_ends) : s.inside;
        members.push_back(QCMember::composite(mid, s.g, a, u0 - dot(a, x)));
        break;
      }
      default: {
        const SmoothShape& s = rng.pick(smooth);
        const bool tight = rng.chance(1, 2);
        members.push_back(QCMember::from_smooth(
            mid, smooth_member(s, rng.nonzero_vec(n, -2, 2), x, tight ? Rational(0) : rng.rational(1, 2, 2))));
        break;
      }
    }
  }
  return make_instance(id, Target::Qc, SublevelOracleQC(n, std::move(members)), std::move(x), FormulaMode::Sampled);
}

ProgramCase gen_program(Rng& rng, const std::string& id, std::size_t dim) {
  const std::size_t n = dim ? dim : static_cast<std::size_t>(rng.integer(2, 3));
  Vec x(n);
  for (auto& c : x) c = rng.pick(std::vector<long>{-3, -2, 0, 1, 3});
  std::vector<FamilyMember> members;
  for (std::size_t i = 0; i < n; ++i) {
    members.push_back({"box+" + std::to_string(i + 1), PolyhedralFunction::affine(unit(n, i), Rational(-3))});
    members.push_back({"box-" + std::to_string(i + 1), PolyhedralFunction::affine(negate(unit(n, i)), Rational(-3))});
  }
  FormulaMode mode = FormulaMode::ExactAffine;
  const long extra = rng.integer(0, 2);
  for (long t = 0; t < extra; ++t) {
    const std::string mid = "g" + std::to_string(t + 1);
    if (rng.chance(1, 3)) {
      std::vector<AffinePiece> pieces;
      for (int i = 0; i < 2; ++i)
        pieces.push_back(piece_at(rng.nonzero_vec(n, -2, 2), x, rng.chance(1, 2) ? Rational(0) : Rational(1)));
      members.push_back({mid, PolyhedralFunction::max_affine(std::move(pieces))});
      mode = FormulaMode::Sampled;
    } else {
      const bool tight = rng.chance(2, 3);
      members.push_back({mid, PolyhedralFunction({piece_at(rng.nonzero_vec(n, -2, 2), x, tight ? Rational(0) : Rational(1))},
                                                 PolyhedronH(n))});
    }
  }
  SupFamily fam(n, std::move(members));

  std::vector<AffinePiece> objective;
  ConeGen N = polyhedron_normal_cone(sup_sublevel_polyhedron(fam, Rational(0)), x);
  if (!N.is_trivial() && rng.chance(1, 2)) {
    // -q with q in the normal cone: x is a minimizer.
    Vec qv = zeros(n);
    for (const auto& r : N.rays) qv = add(qv, scale(Rational(rng.integer(0, 2)), r));
    if (is_zero(qv)) qv = N.rays.front();
    objective.push_back(piece_at(negate(qv), x, Rational(0)));
    if (rng.chance(1, 2)) objective.push_back(piece_at(rng.integer_vec(n, -3, 3), x, Rational(1)));
  } else {
    const long k = rng.integer(1, 3);
    const bool through_x = rng.chance(1, 2);
    for (long i = 0; i < k; ++i)
      objective.push_back(piece_at(rng.integer_vec(n, -3, 3), x, through_x ? Rational(0) : Rational(rng.integer(-2, 2))));
  }
  ProgramCase pc;
  pc.id = id;
  pc.mode = mode;
  pc.program = ProgramInstance{PolyhedralFunction::max_affine(std::move(objective)), std::move(fam), x,
                               Qualification::F0ContinuousAtFeasiblePoint, x};
  return pc;
}

namespace {

// Pieces written as {slope..., intercept}.
using PieceRow = std::vector<long>;

PolyhedralFunction max_of(const std::vector<PieceRow>& rows) {
  std::vector<AffinePiece> pieces;
  for (const auto& r : rows) {
    Vec a;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) a.emplace_back(r[i]);
    pieces.push_back({a, Rational(r.back())});
  }
  return PolyhedralFunction::max_affine(std::move(pieces));
}

FormulaInstance curated(const std::string& id, std::vector<long> x, const std::vector<std::vector<PieceRow>>& members,
                        std::optional<std::pair<std::vector<long>, long>> improper = std::nullopt) {
  Vec xv;
  for (long c : x) xv.emplace_back(c);
  std::vector<FamilyMember> fm;
  for (const auto& rows : members) fm.push_back({member_id(fm.size()), max_of(rows)});
  if (improper) {
    PolyhedronH D(xv.size());
    Vec d;
    for (long c : improper->first) d.emplace_back(c);
    D.add(d, Rational(improper->second));
    fm.push_back({member_id(fm.size()), ImproperFunction{D}});
  }
  SupFamily fam(xv.size(), std::move(fm));
  return make_instance(id, Target::Sublevel, std::move(fam), std::move(xv), FormulaMode::Sampled);
}

}  // namespace

std::vector<FormulaInstance> curated_max_affine() {
  return {
      curated("ma01", {0, 0}, {{{1, 0, 0}, {0, 1, 0}}}),
      curated("ma02", {0, 0}, {{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}}),
      curated("ma03", {0, 0}, {{{1, 0, 0}, {0, 1, -1}}}),
      curated("ma04", {0, 0}, {{{1, 1, 0}, {1, -1, 0}}}),
      curated("ma05", {0, 0}, {{{1, 0, 0}, {0, 0, -1}}, {{0, 1, 0}, {1, 0, -2}}}),
      curated("ma06", {0, 0}, {{{2, 1, 0}, {1, 3, 0}}}),
      curated("ma07", {-1, 0}, {{{1, 0, 0}, {0, 1, 0}}}),
      curated("ma08", {0, 0}, {{{1, -1, 0}, {-1, -1, 0}}}),
      curated("ma09", {0, 0}, {{{1, 0, 0}, {0, 1, 0}}, {{-1, 0, 0}, {0, 1, 0}}}),
      curated("ma10", {0, 0}, {{{1, 0, 0}, {0, 1, 0}, {1, 1, -1}}}),
      curated("ma11", {1, 0}, {{{1, 0, -1}, {-1, 0, -1}, {0, 1, 0}}}),
      curated("ma12", {0}, {{{1, 0}, {-1, -2}}}),
      curated("ma13", {-1}, {{{1, 0}, {0, -1}}}),
      curated("ma14", {1}, {{{4, -4}, {-1, 0}}}),
      curated("ma15", {0, 0, 0}, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}}),
      curated("ma16", {0, 0, 0}, {{{1, 1, 0, 0}, {0, 0, 1, 0}}}),
      curated("ma17", {0, 0, 0}, {{{1, 0, 0, 0}, {0, 1, 0, -1}}, {{0, 0, 1, 0}, {0, 0, -1, -5}}}),
      curated("ma18", {0, 0, 0}, {{{1, 1, 1, 0}, {1, -1, 0, 0}}}),
      curated("ma19", {0, 0, 0}, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, -1, -1, 0}}}),
      curated("ma20", {0, 0}, {{{1, 0, 0}, {0, 1, 0}}}, std::make_pair(std::vector<long>{1, -1}, 0L)),
      curated("ma21", {0, 0}, {{{1, 0, 0}}, {{0, 1, 0}, {-1, 0, -3}}}),
      curated("ma22", {1, 1}, {{{1, 2, -3}, {3, 1, -4}}}),
      curated("ma23", {0, -2}, {{{1, 0, 0}, {0, 1, 0}}}),
      curated("ma24", {0, 0}, {{{1, -1, 0}, {-1, 1, 0}}}),
      curated("ma25", {1, 1, 1}, {{{1, 0, -1, 0}, {0, 1, -1, 0}}}),
  };
}

std::vector<SmoothQcCase> curated_smooth_qc() {
  const auto S = smooth_shapes();
  auto v = [](std::initializer_list<long> c) { return make_vec(c); };
  // member: (shape, a, slack at x)
  struct M {
    int shape;
    Vec a;
    Rational slack;
  };
  auto build = [&](const std::string& id, Vec x, std::vector<M> ms) {
    std::vector<QCMember> members;
    for (auto& m : ms)
      members.push_back(QCMember::from_smooth(member_id(members.size()), smooth_member(S[m.shape], m.a, x, m.slack)));
    return SmoothQcCase{id, SublevelOracleQC(x.size(), std::move(members)), x};
  };
  const Rational z(0), one(1), half(1, 2);
  return {
      build("sq01", v({0}), {{0, v({1}), z}}),
      build("sq02", v({0}), {{1, v({1}), z}, {4, v({1}), one}}),
      build("sq03", v({1}), {{2, v({1}), z}}),
      build("sq04", v({-1}), {{4, v({1}), z}}),
      build("sq05", v({0, 0}), {{0, v({1, 0}), z}, {0, v({0, 1}), z}}),
      build("sq06", v({0, 0}), {{1, v({1, 1}), z}}),
      build("sq07", v({1, 0}), {{2, v({1, 0}), z}, {0, v({0, 1}), z}}),
      build("sq08", v({0, 0}), {{5, v({1, -1}), z}}),
      build("sq09", v({1, 1}), {{3, v({1, 0}), z}, {3, v({0, 1}), z}}),
      build("sq10", v({0, 0}), {{6, v({1, 1}), z}, {4, v({1, 0}), z}}),
      build("sq11", v({0, 0}), {{0, v({1, 0}), one}, {1, v({0, 1}), z}}),
      build("sq12", v({-1, 0}), {{0, v({1, 2}), z}}),
      build("sq13", v({0, 0}), {{0, v({1, 0}), z}, {0, v({0, 1}), z}, {0, v({-1, -1}), z}}),
      build("sq14", v({0, 0, 0}), {{0, v({1, 0, 0}), z}, {0, v({0, 1, 0}), z}, {0, v({0, 0, 1}), z}}),
      build("sq15", v({0, 0, 0}), {{1, v({1, 1, 1}), z}}),
      build("sq16", v({1, 0, 0}), {{2, v({1, 0, 0}), z}, {4, v({0, 0, 1}), z}}),
      build("sq17", v({0, 0, 0}), {{5, v({0, 1, 1}), z}, {0, v({1, 0, 0}), one}}),
      build("sq18", v({1, 1, 1}), {{3, v({1, 0, 0}), z}, {6, v({0, 1, 1}), z}}),
      build("sq19", v({0, 0}), {{4, v({1, 1}), z}, {4, v({1, -1}), z}}),
      build("sq20", v({0}), {{0, v({1}), z}, {4, v({1}), z}, {2, v({2}), half}}),
  };
}

std::vector<ClosureCase> curated_closure_cases() {
  const ExtendedValue inf = ExtendedValue::pos_inf();
  auto val = [](long c) { return ExtendedValue(Rational(c)); };
  auto one = [](std::vector<P1> pieces, ExtendedValue v) {
    return QuasiConvex1D::create({Rational(0)}, std::move(pieces), {std::move(v)});
  };
  return {
      {"cl01", one({lin(1, 0), lin(1, 0)}, val(0))},
      {"cl02", one({con(-1), con(1)}, val(0))},
      {"cl03", one({con(-1), con(1)}, val(1))},
      {"cl04", one({con(-1), P1{}}, inf)},
      {"cl05", one({P1{}, con(-1)}, inf)},
      {"cl06", one({lin(-1, 0), lin(1, -1)}, val(0))},
      {"cl07", one({lin(-1, 0), lin(1, -1)}, val(-1))},
      {"cl08", {QuasiConvex1D::create({Rational(-1), Rational(1)}, {P1{}, con(-1), P1{}}, {val(0), val(0)})}},
      {"cl09", {QuasiConvex1D::create({Rational(-1), Rational(1)}, {P1{}, con(-1), P1{}}, {inf, inf})}},
      {"cl10", {QuasiConvex1D::create({Rational(-1), Rational(1)}, {P1{}, con(-1), P1{}}, {inf, val(0)})}},
      {"cl11", one({lin(-1, 0), lin(-1, 0)}, val(0))},
      {"cl12", one({lin(1, -2), lin(1, -2)}, val(-2))},
      {"cl13", one({con(1), con(-1)}, val(1))},
      {"cl14", one({con(0), con(0)}, val(0))},
      {"cl15", one({lin(-1, -1), lin(1, -1)}, val(-1))},
      {"cl16", one({con(-1), lin(1, -1)}, val(-1))},
      {"cl17", {QuasiConvex1D::create({Rational(-2), Rational(0), Rational(2)}, {P1{}, lin(-1, -2), lin(1, -2), P1{}},
                                      {val(0), val(-2), inf})}},
      {"cl18", {QuasiConvex1D::create({Rational(0), Rational(1)}, {con(-2), con(-1), con(3)}, {val(-2), val(3)})}},
      {"cl19", one({lin(-1, 1), lin(-1, 1)}, val(1))},
      {"cl20", {QuasiConvex1D::create({Rational(1)}, {lin(1, -1), P1{}}, {inf})}},
  };
}

LinearSIPInstance circle_tangent_instance() {
  LinearSIPInstance in;
  in.c = Vec{Rational(-1), Rational(0)};
  in.sampler = CircleSampler{};
  in.x = Vec{Rational(1), Rational(0)};
  return in;
}

LinearSIPInstance circle_offgrid_instance() {
  LinearSIPInstance in;
  in.c = Vec{Rational(-4, 5), Rational(-3, 5)};
  in.sampler = CircleSampler{};
  in.x = Vec{Rational(4, 5), Rational(3, 5)};
  return in;
}

}  // namespace snc
