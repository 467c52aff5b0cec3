#include "snc/polynomial.hpp"

#include <stdexcept>

namespace snc {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& u) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + snc::to_string(c_[i]) + ")";
    if (i >= 1) s += "*u";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational coef = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = coef;
    if (sgn(coef) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c = p.coeffs();
  const Rational lc = p.leading();
  for (auto& v : c) v /= lc;
  return Polynomial(std::move(c));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial dp = p.derivative();
  const Polynomial c = gcd(p, dp);
  Polynomial w = divmod(p, c).quotient;
  Polynomial y = divmod(dp, c).quotient;
  Polynomial z = y - w.derivative();
  while (w.degree() > 0) {
    Polynomial g = gcd(w, z);
    out.push_back(monic(g));
    w = divmod(w, g).quotient;
    y = divmod(z, g).quotient;
    z = y - w.derivative();
  }
  return out;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  const Polynomial q = monic(divmod(p, gcd(p, p.derivative())).quotient);
  std::vector<Polynomial> seq{q, q.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(Polynomial() - r);
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& s : seq) {
    const int lc = sgn(s.leading());
    at_pos.push_back(lc);
    at_neg.push_back(s.degree() % 2 == 0 ? lc : -lc);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

int monotonicity(const Polynomial& p) {
  const Polynomial dp = p.derivative();
  if (dp.is_zero()) return 0;
  Polynomial odd({Rational(1)});
  auto factors = squarefree_decomposition(dp);
  for (std::size_t i = 0; i < factors.size(); i += 2) odd = odd * factors[i];
  if (count_real_roots(odd) != 0) return 0;
  return sgn(dp.leading()) > 0 ? 1 : -1;
}

}  // namespace snc
