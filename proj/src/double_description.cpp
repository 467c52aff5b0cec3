#include "snc/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

namespace snc {

namespace {

struct TrackedRay {
  Vec v;
  boost::dynamic_bitset<> zero;  // processed constraints that are tight on v
};

// v - (<a,v> / <a,l>) l, made primitive.
Vec eliminate_along(const Vec& v, const Vec& l, const Rational& av, const Rational& al) {
  if (sgn(av) == 0) return v;
  return primitive(sub(v, scale(av / al, l)));
}

}  // namespace

ConeDescription cone_generators(const std::vector<Vec>& normals, std::size_t dim, const DDOptions& options) {
  const std::size_t m = normals.size();
  std::vector<Vec> lines;
  lines.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) lines.push_back(unit(dim, i));
  std::vector<TrackedRay> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const Vec& a = normals[k];
    require_dim(a, dim, "cone constraint");
    if (is_zero(a)) {
      for (auto& r : rays) r.zero.set(k);
      continue;
    }

    std::size_t pivot_line = lines.size();
    Rational al;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      al = dot(a, lines[i]);
      if (sgn(al) != 0) {
        pivot_line = i;
        break;
      }
    }

    if (pivot_line != lines.size()) {
      const Vec l = lines[pivot_line];
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pivot_line));
      for (auto& other : lines) other = eliminate_along(other, l, dot(a, other), al);
      for (auto& r : rays) {
        r.v = eliminate_along(r.v, l, dot(a, r.v), al);
        r.zero.set(k);
      }
      TrackedRay fresh{sgn(al) < 0 ? l : negate(l), boost::dynamic_bitset<>(m)};
      for (std::size_t j = 0; j < k; ++j) fresh.zero.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (sgn(val[i]) > 0) pos.push_back(i);
      if (sgn(val[i]) < 0) neg.push_back(i);
    }
    if (pos.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (sgn(val[i]) == 0) rays[i].zero.set(k);
      }
      continue;
    }

    const std::size_t pointed_dim = dim - lines.size();
    const std::size_t min_common = pointed_dim >= 2 ? pointed_dim - 2 : 0;
    std::vector<TrackedRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(val[i]) <= 0) next.push_back(rays[i]);
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        // <a, combo> = val[p]*val[q] - val[q]*val[p] = 0 with positive weights.
        Vec combo = sub(scale(val[p], rays[q].v), scale(val[q], rays[p].v));
        next.push_back(TrackedRay{primitive(combo), common});
        if (next.size() > options.max_generators) {
          throw SizingError("double description exceeded " + std::to_string(options.max_generators) +
                            " generators");
        }
      }
    }
    for (auto& r : next) {
      if (sgn(dot(a, r.v)) == 0) r.zero.set(k);
    }
    rays = std::move(next);
    if (rays.size() > options.max_generators) {
      throw SizingError("double description exceeded " + std::to_string(options.max_generators) +
                        " generators");
    }
  }

  ConeDescription out;
  out.lines = std::move(lines);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace snc
