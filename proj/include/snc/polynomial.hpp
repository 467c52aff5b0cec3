#pragma once

#include <string>
#include <vector>

#include "snc/rational.hpp"

namespace snc {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& u) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient, remainder;
};
/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial monic(const Polynomial& p);

/// Yun decomposition p = lc * prod_i factors[i]^(i+1) with square-free, pairwise coprime factors.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Number of distinct real roots (Sturm sequence over the whole line).
int count_real_roots(const Polynomial& p);

/// +1 if p is strictly increasing on R, -1 if strictly decreasing, 0 otherwise.
/// Decided exactly: p' may vanish only at roots of even multiplicity.
int monotonicity(const Polynomial& p);

}  // namespace snc
