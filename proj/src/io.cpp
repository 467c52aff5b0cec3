#include "snc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace snc {

std::string to_string(MemberSpec::Kind k) {
  switch (k) {
    case MemberSpec::Kind::Affine: return "affine";
    case MemberSpec::Kind::MaxAffine: return "max-affine";
    case MemberSpec::Kind::ImproperDomain: return "improper-domain";
    case MemberSpec::Kind::QcSublevel: return "qc-sublevel";
    case MemberSpec::Kind::QcComposite: return "qc-composite";
    case MemberSpec::Kind::SmoothQc: return "smooth-qc";
  }
  return "?";
}

const std::vector<std::string>& instance_commands() {
  static const std::vector<std::string> commands = {"normal-cone", "dom-cone", "qc", "check-optimal", "check-sip"};
  return commands;
}

Json json_rational(const Rational& r) { return to_string(r); }

Json json_vec(const Vec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

Json json_cone(const ConeGen& c) {
  Json a = Json::array();
  for (const auto& r : canonicalize(c).rays) a.push_back(json_vec(r));
  return a;
}

namespace {

// ---- reading --------------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

void require_keys(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) fail(path, std::string("missing field \"") + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) fail(path, "unknown field \"" + key + "\"");
  }
}

Rational read_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

ExtendedValue read_extended(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string or \"+inf\"");
  try {
    return parse_extended(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long read_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

const Json& read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Vec read_vec(const Json& j, const std::string& path, std::size_t n) {
  read_array(j, path);
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

PolyhedronH read_halfspaces(const Json& j, const std::string& path, std::size_t n) {
  read_array(j, path);
  PolyhedronH P(n);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require_keys(j[i], p, {"normal", "offset"}, {});
    P.add(read_vec(j[i]["normal"], p + ".normal", n), read_rational(j[i]["offset"], p + ".offset"));
  }
  return P;
}

AffinePiece read_piece(const Json& j, const std::string& path, std::size_t n) {
  require_keys(j, path, {"slope", "intercept"}, {});
  return {read_vec(j["slope"], path + ".slope", n), read_rational(j["intercept"], path + ".intercept")};
}

PolyhedralFunction read_polyhedral(const Json& j, const std::string& path, std::size_t n) {
  require_keys(j, path, {"pieces"}, {"domain"});
  std::vector<AffinePiece> pieces;
  const Json& ps = read_array(j["pieces"], path + ".pieces");
  if (ps.empty()) fail(path + ".pieces", "needs at least one piece");
  for (std::size_t i = 0; i < ps.size(); ++i) pieces.push_back(read_piece(ps[i], path + ".pieces[" + std::to_string(i) + "]", n));
  PolyhedronH dom = j.contains("domain") ? read_halfspaces(j["domain"], path + ".domain", n) : PolyhedronH(n);
  return PolyhedralFunction(std::move(pieces), std::move(dom));
}

QuasiConvex1D read_qc1d(const Json& j, const std::string& path) {
  require_keys(j, path, {"breakpoints", "pieces", "values"}, {});
  std::vector<Rational> bps;
  const Json& b = read_array(j["breakpoints"], path + ".breakpoints");
  for (std::size_t i = 0; i < b.size(); ++i) bps.push_back(read_rational(b[i], path + ".breakpoints[" + std::to_string(i) + "]"));
  std::vector<std::optional<AffinePiece1D>> pieces;
  const Json& ps = read_array(j["pieces"], path + ".pieces");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string p = path + ".pieces[" + std::to_string(i) + "]";
    if (ps[i].is_null()) {
      pieces.emplace_back();
      continue;
    }
    require_keys(ps[i], p, {"slope", "intercept"}, {});
    pieces.push_back(AffinePiece1D{read_rational(ps[i]["slope"], p + ".slope"), read_rational(ps[i]["intercept"], p + ".intercept")});
  }
  std::vector<ExtendedValue> values;
  const Json& vs = read_array(j["values"], path + ".values");
  for (std::size_t i = 0; i < vs.size(); ++i) values.push_back(read_extended(vs[i], path + ".values[" + std::to_string(i) + "]"));
  try {
    return QuasiConvex1D::create(std::move(bps), std::move(pieces), std::move(values));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

MemberSpec read_member(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_object() || !j.contains("kind")) fail(path, "member needs a \"kind\"");
  const std::string kind = read_string(j["kind"], path + ".kind");
  MemberSpec m;
  if (j.contains("id")) m.id = read_string(j["id"], path + ".id");
  try {
    if (kind == "affine") {
      require_keys(j, path, {"kind", "id", "slope", "intercept"}, {"domain"});
      m.kind = MemberSpec::Kind::Affine;
      PolyhedronH dom = j.contains("domain") ? read_halfspaces(j["domain"], path + ".domain", n) : PolyhedronH(n);
      m.fn = PolyhedralFunction({AffinePiece{read_vec(j["slope"], path + ".slope", n), read_rational(j["intercept"], path + ".intercept")}},
                                std::move(dom));
    } else if (kind == "max-affine") {
      require_keys(j, path, {"kind", "id", "pieces"}, {"domain"});
      m.kind = MemberSpec::Kind::MaxAffine;
      Json body = {{"pieces", j["pieces"]}};
      if (j.contains("domain")) body["domain"] = j["domain"];
      m.fn = read_polyhedral(body, path, n);
    } else if (kind == "improper-domain") {
      require_keys(j, path, {"kind", "id", "domain"}, {});
      m.kind = MemberSpec::Kind::ImproperDomain;
      m.fn = ImproperFunction{read_halfspaces(j["domain"], path + ".domain", n)};
    } else if (kind == "qc-sublevel") {
      require_keys(j, path, {"kind", "id", "zero_sublevel"}, {});
      m.kind = MemberSpec::Kind::QcSublevel;
      m.qc = QCMember::sublevel(m.id, read_halfspaces(j["zero_sublevel"], path + ".zero_sublevel", n));
    } else if (kind == "qc-composite") {
      require_keys(j, path, {"kind", "id", "a", "b", "g"}, {});
      m.kind = MemberSpec::Kind::QcComposite;
      m.qc = QCMember::composite(m.id, read_qc1d(j["g"], path + ".g"), read_vec(j["a"], path + ".a", n),
                                 read_rational(j["b"], path + ".b"));
    } else if (kind == "smooth-qc") {
      require_keys(j, path, {"kind", "id", "a", "b", "poly", "direction", "root"}, {});
      m.kind = MemberSpec::Kind::SmoothQc;
      std::vector<Rational> coeffs;
      const Json& p = read_array(j["poly"], path + ".poly");
      for (std::size_t i = 0; i < p.size(); ++i) coeffs.push_back(read_rational(p[i], path + ".poly[" + std::to_string(i) + "]"));
      const std::string dir = read_string(j["direction"], path + ".direction");
      if (dir != "increasing" && dir != "decreasing") fail(path + ".direction", "expected increasing or decreasing");
      SmoothQCMember s{read_vec(j["a"], path + ".a", n), read_rational(j["b"], path + ".b"), Polynomial(coeffs),
                       dir == "increasing" ? 1 : -1, read_rational(j["root"], path + ".root")};
      m.qc = QCMember::from_smooth(m.id, s);
    } else {
      fail(path + ".kind", "unknown member kind \"" + kind + "\"");
    }
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    fail(path, msg);
  }
  return m;
}

ClosureEvidence read_evidence(const Json& j, const std::string& path, std::size_t n) {
  require_keys(j, path, {"kind"}, {"point"});
  const std::string kind = read_string(j["kind"], path + ".kind");
  if (kind == "none" || kind == "check") {
    if (j.contains("point")) fail(path + ".point", "only continuity-point evidence takes a point");
    return kind == "none" ? ClosureEvidence::none() : ClosureEvidence::check();
  }
  if (kind == "continuity-point") {
    if (!j.contains("point")) fail(path, "continuity-point evidence needs a point");
    return ClosureEvidence::continuity(read_vec(j["point"], path + ".point", n));
  }
  fail(path + ".kind", "unknown evidence kind \"" + kind + "\"");
}

SipSpec read_sip(const Json& j, const std::string& path, std::size_t n) {
  require_keys(j, path, {"cost"}, {"constraints", "sampler", "levels"});
  SipSpec s;
  s.cost = read_vec(j["cost"], path + ".cost", n);
  if (j.contains("constraints")) {
    const Json& cs = read_array(j["constraints"], path + ".constraints");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = path + ".constraints[" + std::to_string(i) + "]";
      require_keys(cs[i], p, {"a", "b"}, {});
      s.constraints.emplace_back(read_vec(cs[i]["a"], p + ".a", n), read_rational(cs[i]["b"], p + ".b"));
    }
  }
  if (j.contains("sampler")) {
    const std::string p = path + ".sampler";
    require_keys(j["sampler"], p, {"kind"}, {"lo", "hi", "b"});
    if (read_string(j["sampler"]["kind"], p + ".kind") != "circle") fail(p + ".kind", "only the circle sampler exists");
    CircleSampler c;
    if (j["sampler"].contains("lo")) c.lo = read_rational(j["sampler"]["lo"], p + ".lo");
    if (j["sampler"].contains("hi")) c.hi = read_rational(j["sampler"]["hi"], p + ".hi");
    if (j["sampler"].contains("b")) c.b = read_rational(j["sampler"]["b"], p + ".b");
    s.sampler = c;
  }
  if (j.contains("levels")) {
    const Json& ls = read_array(j["levels"], path + ".levels");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      long k = read_int(ls[i], path + ".levels[" + std::to_string(i) + "]");
      if (k < 0 || k > 20) fail(path + ".levels[" + std::to_string(i) + "]", "level must be in 0..20");
      s.levels.push_back(static_cast<int>(k));
    }
  }
  if (s.constraints.empty() == !s.sampler.has_value()) fail(path, "give exactly one of constraints or sampler");
  return s;
}

// ---- writing --------------------------------------------------------------

Json json_halfspaces(const PolyhedronH& P) {
  Json a = Json::array();
  for (const auto& h : P.constraints) a.push_back(Json{{"normal", json_vec(h.normal)}, {"offset", json_rational(h.offset)}});
  return a;
}

Json json_pieces(const std::vector<AffinePiece>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(Json{{"slope", json_vec(p.slope)}, {"intercept", json_rational(p.intercept)}});
  return a;
}

Json json_polyhedral(const PolyhedralFunction& f) {
  Json j{{"pieces", json_pieces(f.pieces)}};
  if (!f.domain.constraints.empty()) j["domain"] = json_halfspaces(f.domain);
  return j;
}

Json json_qc1d(const QuasiConvex1D& g) {
  Json bps = Json::array(), pieces = Json::array(), values = Json::array();
  for (const auto& b : g.breakpoints()) bps.push_back(json_rational(b));
  for (const auto& p : g.pieces()) {
    if (p) pieces.push_back(Json{{"slope", json_rational(p->slope)}, {"intercept", json_rational(p->intercept)}});
    else pieces.push_back(nullptr);
  }
  for (const auto& v : g.values()) values.push_back(to_string(v));
  return Json{{"breakpoints", bps}, {"pieces", pieces}, {"values", values}};
}

Json json_member(const MemberSpec& m) {
  Json j{{"id", m.id}, {"kind", to_string(m.kind)}};
  switch (m.kind) {
    case MemberSpec::Kind::Affine: {
      const auto& f = std::get<PolyhedralFunction>(*m.fn);
      j["slope"] = json_vec(f.pieces.front().slope);
      j["intercept"] = json_rational(f.pieces.front().intercept);
      if (!f.domain.constraints.empty()) j["domain"] = json_halfspaces(f.domain);
      break;
    }
    case MemberSpec::Kind::MaxAffine: {
      const auto& f = std::get<PolyhedralFunction>(*m.fn);
      j["pieces"] = json_pieces(f.pieces);
      if (!f.domain.constraints.empty()) j["domain"] = json_halfspaces(f.domain);
      break;
    }
    case MemberSpec::Kind::ImproperDomain: j["domain"] = json_halfspaces(std::get<ImproperFunction>(*m.fn).domain); break;
    case MemberSpec::Kind::QcSublevel: j["zero_sublevel"] = json_halfspaces(m.qc->zero_closure); break;
    case MemberSpec::Kind::QcComposite:
      j["a"] = json_vec(m.qc->a);
      j["b"] = json_rational(m.qc->b);
      j["g"] = json_qc1d(*m.qc->g);
      break;
    case MemberSpec::Kind::SmoothQc: {
      const SmoothQCMember& s = *m.qc->smooth;
      j["a"] = json_vec(s.a);
      j["b"] = json_rational(s.b);
      Json poly = Json::array();
      for (const auto& c : s.p.coeffs()) poly.push_back(json_rational(c));
      j["poly"] = poly;
      j["direction"] = s.direction > 0 ? "increasing" : "decreasing";
      j["root"] = json_rational(s.root);
      break;
    }
  }
  return j;
}

bool is_convex_kind(MemberSpec::Kind k) {
  return k == MemberSpec::Kind::Affine || k == MemberSpec::Kind::MaxAffine || k == MemberSpec::Kind::ImproperDomain;
}

}  // namespace

bool InstanceFile::convex_family() const {
  return std::all_of(members.begin(), members.end(), [](const MemberSpec& m) { return is_convex_kind(m.kind); });
}

Constraints InstanceFile::constraints() const {
  if (members.empty()) throw InputError("members: the family is empty");
  const bool convex = convex_family();
  const bool qc = std::none_of(members.begin(), members.end(), [](const MemberSpec& m) { return is_convex_kind(m.kind); });
  if (!convex && !qc) throw InputError("members: convex and quasi-convex kinds cannot be mixed");
  if (convex) {
    std::vector<FamilyMember> fm;
    for (const auto& m : members) fm.push_back({m.id, *m.fn});
    return SupFamily(dim, std::move(fm));
  }
  std::vector<QCMember> qm;
  for (const auto& m : members) qm.push_back(*m.qc);
  return SublevelOracleQC(dim, std::move(qm));
}

const Vec& InstanceFile::require_point() const {
  if (!point) throw InputError("point: missing field \"point\"");
  return *point;
}

std::vector<Rational> InstanceFile::epsilons() const { return epsilon.empty() ? std::vector<Rational>{Rational(1)} : epsilon; }

SGrid InstanceFile::grid() const { return s_grid ? SGrid::parse(*s_grid) : default_grid(); }

FormulaMode InstanceFile::formula_mode() const { return mode.value_or(FormulaMode::Sampled); }

InstanceFile parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(j, "$", {"version", "command", "dim"},
               {"members", "point", "epsilon", "s_grid", "mode", "objective", "qualification", "closure_evidence", "sip"});
  InstanceFile f;
  f.version = static_cast<int>(read_int(j["version"], "$.version"));
  if (f.version != kFormatVersion) fail("$.version", "unsupported format version " + std::to_string(f.version));
  f.command = read_string(j["command"], "$.command");
  const auto& cmds = instance_commands();
  if (std::find(cmds.begin(), cmds.end(), f.command) == cmds.end()) fail("$.command", "unknown command \"" + f.command + "\"");
  const long dim = read_int(j["dim"], "$.dim");
  if (dim < 1 || dim > 16) fail("$.dim", "dimension must be in 1..16");
  f.dim = static_cast<std::size_t>(dim);
  if (j.contains("members")) {
    const Json& ms = read_array(j["members"], "$.members");
    for (std::size_t i = 0; i < ms.size(); ++i) f.members.push_back(read_member(ms[i], "$.members[" + std::to_string(i) + "]", f.dim));
  } else if (f.command != "check-sip") {
    fail("$", "missing field \"members\"");
  }
  if (j.contains("point")) f.point = read_vec(j["point"], "$.point", f.dim);
  if (j.contains("epsilon")) {
    const Json& es = read_array(j["epsilon"], "$.epsilon");
    for (std::size_t i = 0; i < es.size(); ++i) {
      Rational e = read_rational(es[i], "$.epsilon[" + std::to_string(i) + "]");
      if (sgn(e) <= 0) fail("$.epsilon[" + std::to_string(i) + "]", "epsilon must be positive");
      f.epsilon.push_back(e);
    }
  }
  if (j.contains("s_grid")) {
    f.s_grid = read_string(j["s_grid"], "$.s_grid");
    try {
      f.s_grid = SGrid::parse(*f.s_grid).to_string();
    } catch (const InputError& e) {
      fail("$.s_grid", e.what());
    }
  }
  if (j.contains("mode")) {
    try {
      f.mode = parse_mode(read_string(j["mode"], "$.mode"));
    } catch (const InputError& e) {
      fail("$.mode", e.what());
    }
  }
  if (j.contains("objective")) f.objective = read_polyhedral(j["objective"], "$.objective", f.dim);
  if (j.contains("qualification")) {
    require_keys(j["qualification"], "$.qualification", {"kind", "witness"}, {});
    try {
      f.qualification = parse_qualification(read_string(j["qualification"]["kind"], "$.qualification.kind"));
    } catch (const InputError& e) {
      fail("$.qualification.kind", e.what());
    }
    f.witness = read_vec(j["qualification"]["witness"], "$.qualification.witness", f.dim);
  }
  if (j.contains("closure_evidence")) f.closure_evidence = read_evidence(j["closure_evidence"], "$.closure_evidence", f.dim);
  if (j.contains("sip")) f.sip = read_sip(j["sip"], "$.sip", f.dim);
  if (f.command == "check-sip" && !f.sip) fail("$", "check-sip needs a \"sip\" object");
  if (f.command == "check-optimal" && !f.objective) fail("$", "check-optimal needs an \"objective\"");
  // ids must be unique and nonempty; the family constructors report it with context
  if (!f.members.empty()) {
    try {
      (void)f.constraints();
    } catch (const InputError& e) {
      fail("$.members", e.what());
    }
  }
  return f;
}

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string print_instance(const InstanceFile& f) {
  Json j;
  j["version"] = f.version;
  j["command"] = f.command;
  j["dim"] = f.dim;
  if (!f.members.empty()) {
    Json ms = Json::array();
    for (const auto& m : f.members) ms.push_back(json_member(m));
    j["members"] = ms;
  }
  if (f.point) j["point"] = json_vec(*f.point);
  if (!f.epsilon.empty()) j["epsilon"] = json_vec(f.epsilon);
  if (f.s_grid) j["s_grid"] = *f.s_grid;
  if (f.mode) j["mode"] = to_string(*f.mode);
  if (f.objective) j["objective"] = json_polyhedral(*f.objective);
  if (f.qualification) j["qualification"] = Json{{"kind", to_string(*f.qualification)}, {"witness", json_vec(*f.witness)}};
  if (f.closure_evidence) {
    Json e{{"kind", to_string(f.closure_evidence->kind)}};
    if (f.closure_evidence->point) e["point"] = json_vec(*f.closure_evidence->point);
    j["closure_evidence"] = e;
  }
  if (f.sip) {
    Json s{{"cost", json_vec(f.sip->cost)}};
    if (!f.sip->constraints.empty()) {
      Json cs = Json::array();
      for (const auto& [a, b] : f.sip->constraints) cs.push_back(Json{{"a", json_vec(a)}, {"b", json_rational(b)}});
      s["constraints"] = cs;
    }
    if (f.sip->sampler) {
      s["sampler"] = Json{{"kind", "circle"},
                          {"lo", json_rational(f.sip->sampler->lo)},
                          {"hi", json_rational(f.sip->sampler->hi)},
                          {"b", json_rational(f.sip->sampler->b)}};
    }
    if (!f.sip->levels.empty()) s["levels"] = f.sip->levels;
    j["sip"] = s;
  }
  return j.dump(2) + "\n";
}

namespace {

std::vector<MemberSpec> member_specs(const Constraints& cs) {
  std::vector<MemberSpec> out;
  if (const auto* fam = std::get_if<SupFamily>(&cs)) {
    for (const auto& m : fam->members()) {
      MemberSpec s;
      s.id = m.id;
      s.fn = m.fn;
      if (const auto* f = std::get_if<PolyhedralFunction>(&m.fn)) s.kind = f->pieces.size() == 1 ? MemberSpec::Kind::Affine : MemberSpec::Kind::MaxAffine;
      else s.kind = MemberSpec::Kind::ImproperDomain;
      out.push_back(std::move(s));
    }
    return out;
  }
  for (const auto& m : std::get<SublevelOracleQC>(cs).members()) {
    MemberSpec s;
    s.id = m.id;
    s.qc = m;
    s.kind = m.kind == QCMember::Kind::Sublevel    ? MemberSpec::Kind::QcSublevel
             : m.kind == QCMember::Kind::Composite ? MemberSpec::Kind::QcComposite
                                                   : MemberSpec::Kind::SmoothQc;
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t constraints_dim(const Constraints& cs) {
  if (const auto* fam = std::get_if<SupFamily>(&cs)) return fam->dim();
  return std::get<SublevelOracleQC>(cs).dim();
}

}  // namespace

InstanceFile instance_from(const FormulaInstance& in) {
  InstanceFile f;
  f.command = in.target == Target::Sublevel ? "normal-cone" : in.target == Target::Dom ? "dom-cone" : "qc";
  f.dim = constraints_dim(in.constraints);
  f.members = member_specs(in.constraints);
  f.point = in.x;
  f.epsilon = {in.eps};
  if (in.target == Target::Sublevel) {
    f.s_grid = in.grid.to_string();
    f.mode = in.mode;
  }
  if (in.target == Target::Qc) f.closure_evidence = in.evidence;
  return f;
}

InstanceFile instance_from(const ProgramInstance& prog, FormulaMode mode) {
  InstanceFile f;
  f.command = "check-optimal";
  f.dim = constraints_dim(prog.constraints);
  f.members = member_specs(prog.constraints);
  f.point = prog.x;
  f.epsilon = {Rational(1)};
  f.mode = mode;
  f.objective = prog.objective;
  f.qualification = prog.qualification;
  f.witness = prog.witness;
  return f;
}

}  // namespace snc
