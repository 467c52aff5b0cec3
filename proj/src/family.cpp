#include "snc/family.hpp"

#include <algorithm>
#include <set>

namespace snc {

SupFamily::SupFamily(std::size_t dim, std::vector<FamilyMember> members) : dim_(dim), members_(std::move(members)) {
  if (dim_ == 0) throw InputError("family dimension must be positive");
  if (members_.empty()) throw InputError("family needs at least one member");
  std::set<std::string> seen;
  for (const auto& m : members_) {
    if (m.id.empty()) throw InputError("member id must not be empty");
    if (!seen.insert(m.id).second) throw InputError("duplicate member id '" + m.id + "'");
    if (dim_of(m.fn) != dim_) throw InputError("member '" + m.id + "' has the wrong dimension");
    if (std::holds_alternative<ImproperFunction>(m.fn) && is_empty(domain_of(m.fn))) {
      throw InputError("improper member '" + m.id + "' needs a nonempty domain");
    }
  }
}

ExtendedValue SupFamily::evaluate(const Vec& x) const {
  ExtendedValue best = ExtendedValue::neg_inf();
  for (const auto& m : members_) best = std::max(best, snc::evaluate(m.fn, x));
  return best;
}

bool SupFamily::has_improper() const {
  return std::any_of(members_.begin(), members_.end(),
                     [](const FamilyMember& m) { return std::holds_alternative<ImproperFunction>(m.fn); });
}

bool SupFamily::all_affine() const {
  for (const auto& m : members_) {
    const auto* p = std::get_if<PolyhedralFunction>(&m.fn);
    if (p && !p->is_affine_full_domain()) return false;
  }
  return true;
}

void SupFamily::require_feasible(const Vec& x) const {
  require_dim(x, dim_, "query point");
  const ExtendedValue fx = evaluate(x);
  if (!fx.is_finite()) throw PreconditionError("f(x) = " + snc::to_string(fx) + " is not finite at " + snc::to_string(x));
  if (sgn(fx.value()) > 0) throw PreconditionError("x = " + snc::to_string(x) + " violates f(x) <= 0 (f(x) = " + snc::to_string(fx) + ")");
}

SGrid SGrid::geometric(int lo, int hi, bool tail) {
  if (lo > hi) throw InputError("empty geometric s-grid");
  SGrid g;
  for (int k = lo; k <= hi; ++k) {
    Rational v = 1;
    if (k >= 0) v.get_num() <<= k;
    else v.get_den() <<= -k;
    g.values.push_back(v);
  }
  g.tail = tail;
  g.spec = "2^" + std::to_string(lo) + "..2^" + std::to_string(hi);
  return g;
}

SGrid SGrid::list(std::vector<Rational> values, bool tail) {
  if (values.empty()) throw InputError("empty s-grid");
  for (const auto& v : values) {
    if (sgn(v) <= 0) throw InputError("s-grid values must be positive, got " + snc::to_string(v));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  SGrid g;
  g.values = std::move(values);
  g.tail = tail;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (i) g.spec += ",";
    g.spec += snc::to_string(g.values[i]);
  }
  return g;
}

SGrid SGrid::parse(const std::string& text) {
  std::string body = text;
  std::optional<bool> tail;
  if (auto pos = text.find(';'); pos != std::string::npos) {
    body = text.substr(0, pos);
    const std::string flag = text.substr(pos + 1);
    if (flag == "tail") tail = true;
    else if (flag == "notail") tail = false;
    else throw InputError("unknown s-grid flag '" + flag + "' (expected tail or notail)");
  }
  if (body.rfind("2^", 0) == 0) {
    auto dots = body.find("..");
    if (dots == std::string::npos || body.compare(dots + 2, 2, "2^") != 0) {
      throw InputError("malformed geometric s-grid '" + body + "' (expected 2^lo..2^hi)");
    }
    try {
      std::size_t used1 = 0, used2 = 0;
      const std::string a = body.substr(2, dots - 2);
      const std::string b = body.substr(dots + 4);
      int lo = std::stoi(a, &used1);
      int hi = std::stoi(b, &used2);
      if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument("trailing");
      if (hi - lo > 200) throw InputError("geometric s-grid too long");
      return geometric(lo, hi, tail.value_or(true));
    } catch (const std::logic_error&) {
      throw InputError("malformed geometric s-grid '" + body + "'");
    }
  }
  std::vector<Rational> vals;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    vals.push_back(parse_rational(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return list(std::move(vals), tail.value_or(false));
}

SGrid SGrid::refined() const {
  std::vector<Rational> v = values;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) v.push_back((values[i] + values[i + 1]) / 2);
  v.push_back(values.front() / 2);
  v.push_back(values.back() * 2);
  SGrid g = list(std::move(v), tail);
  return g;
}

std::string SGrid::to_string() const { return spec + (tail ? ";tail" : ";notail"); }

}  // namespace snc
