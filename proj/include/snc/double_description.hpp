#pragma once

#include <vector>

#include "snc/vec.hpp"

namespace snc {

struct DDOptions {
  /// Upper bound on the number of rays alive at any iteration.
  std::size_t max_generators = 1'000'000;
};

/// Minimal generators of a polyhedral cone: lineality basis plus extreme rays
/// (modulo the lineality space). The cone is span(lines) + cone(rays).
struct ConeDescription {
  std::vector<Vec> lines;
  std::vector<Vec> rays;
};

/// Double description for {z in R^dim : <a_i, z> <= 0 for all i}. Constraints are
/// inserted in the given order; generators are kept as primitive integer vectors.
/// Throws SizingError when the cap is exceeded.
ConeDescription cone_generators(const std::vector<Vec>& normals, std::size_t dim,
                                const DDOptions& options = {});

}  // namespace snc
