#include "snc/lp.hpp"

#include <limits>
#include <optional>

namespace snc {

void LinearProgram::add_row(Vec coeffs, Sense sense, Rational rhs) {
  require_dim(coeffs, num_vars, "LP row");
  rows.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for: maximize c x, A x = b, x >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::size_t first_artificial)
      : a_(std::move(a)), b_(std::move(b)), first_art_(first_artificial) {
    cols_ = a_.empty() ? first_artificial : a_[0].size();
    basis_.resize(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) basis_[i] = first_art_ + i;
    allowed_.assign(cols_, true);
  }

  // Phase 1: maximize -sum(artificials). Returns the optimum (<= 0).
  Rational phase_one() {
    d_.assign(cols_, Rational(0));
    z_ = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      for (std::size_t j = 0; j < first_art_; ++j) d_[j] += a_[i][j];
      z_ -= b_[i];
    }
    run();
    return z_;
  }

  // Removes artificials from the basis; drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < a_.size();) {
      if (basis_[i] < first_art_) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(a_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
    for (std::size_t j = first_art_; j < cols_; ++j) allowed_[j] = false;
  }

  // Phase 2 with objective c over the structural+slack columns.
  // Returns the entering column when unbounded, kNone when optimal.
  std::size_t phase_two(const std::vector<Rational>& c) {
    d_.assign(cols_, Rational(0));
    z_ = 0;
    for (std::size_t j = 0; j < first_art_; ++j) d_[j] = c[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < first_art_; ++j) d_[j] -= cb * a_[i][j];
      z_ += cb * b_[i];
    }
    return run();
  }

  const Rational& value() const { return z_; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(first_art_, Rational(0));
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (basis_[i] < first_art_) x[basis_[i]] = b_[i];
    }
    return x;
  }

  std::vector<Rational> ray(std::size_t entering) const {
    std::vector<Rational> r(first_art_, Rational(0));
    r[entering] = 1;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (basis_[i] < first_art_) r[basis_[i]] = -a_[i][entering];
    }
    return r;
  }

 private:
  std::size_t run() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && sgn(d_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(a_[r][j]) != 0) a_[r][j] /= p;
    }
    b_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    if (!d_.empty() && sgn(d_[c]) != 0) {
      const Rational f = d_[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(a_[r][j]) != 0) d_[j] -= f * a_[r][j];
      }
      z_ += f * b_[r];
    }
    basis_[r] = c;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::size_t first_art_;
  std::size_t cols_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<Rational> d_;
  Rational z_ = 0;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  std::vector<bool> is_free = lp.free_var;
  is_free.resize(n, false);
  Vec objective = lp.objective.empty() ? zeros(n) : lp.objective;
  require_dim(objective, n, "LP objective");

  // Column layout: [structural (free vars split into +/-)] [slacks] [artificials].
  std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (is_free[j]) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(lp.rows.size(), kNone);
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].sense != LinearProgram::Sense::Eq) slack_col[i] = cols++;
  }
  const std::size_t first_art = cols;
  const std::size_t m = lp.rows.size();
  const std::size_t total = cols + m;

  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(total, Rational(0)));
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      a[i][pos_col[j]] = row.coeffs[j];
      if (neg_col[j] != kNone) a[i][neg_col[j]] = -row.coeffs[j];
    }
    if (row.sense == LinearProgram::Sense::Le) a[i][slack_col[i]] = 1;
    if (row.sense == LinearProgram::Sense::Ge) a[i][slack_col[i]] = -1;
    b[i] = row.rhs;
    if (sgn(b[i]) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
      b[i] = -b[i];
    }
    a[i][first_art + i] = 1;
  }

  Tableau tab(std::move(a), std::move(b), first_art);
  LpResult result;
  if (sgn(tab.phase_one()) < 0) {
    result.status = LpResult::Status::Infeasible;
    return result;
  }
  tab.expel_artificials();

  std::vector<Rational> c(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    c[pos_col[j]] = objective[j];
    if (neg_col[j] != kNone) c[neg_col[j]] = -objective[j];
  }
  const std::size_t enter = tab.phase_two(c);

  auto to_original = [&](const std::vector<Rational>& x) {
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = x[pos_col[j]];
      if (neg_col[j] != kNone) v[j] -= x[neg_col[j]];
    }
    return v;
  };
  result.point = to_original(tab.solution());
  if (enter != kNone) {
    result.status = LpResult::Status::Unbounded;
    result.ray = to_original(tab.ray(enter));
    return result;
  }
  result.status = LpResult::Status::Optimal;
  result.value = tab.value();
  return result;
}

}  // namespace snc
