#pragma once

#include <vector>

#include "snc/vec.hpp"

namespace snc {

/// maximize <objective, x> subject to rows, with each variable either free or
/// nonnegative. Solved exactly by a two-phase tableau simplex under Bland's rule.
struct LinearProgram {
  enum class Sense { Le, Eq, Ge };
  struct Row {
    Vec coeffs;
    Sense sense = Sense::Le;
    Rational rhs = 0;
  };

  std::size_t num_vars = 0;
  std::vector<bool> free_var;  // empty means all nonnegative
  std::vector<Row> rows;
  Vec objective;  // empty means zero (pure feasibility)

  explicit LinearProgram(std::size_t n, bool all_free = false)
      : num_vars(n), free_var(n, all_free), objective(zeros(n)) {}

  void add_row(Vec coeffs, Sense sense, Rational rhs);
};

struct LpResult {
  enum class Status { Infeasible, Unbounded, Optimal };
  Status status = Status::Infeasible;
  Rational value = 0;
  Vec point;  // a feasible optimum when Optimal, a feasible point when Unbounded
  Vec ray;    // improving recession direction when Unbounded

  bool optimal() const { return status == Status::Optimal; }
  bool infeasible() const { return status == Status::Infeasible; }
  bool unbounded() const { return status == Status::Unbounded; }
};

LpResult solve(const LinearProgram& lp);

}  // namespace snc
