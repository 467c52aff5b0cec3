#include "snc/vec.hpp"

namespace snc {

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v.at(i) = 1;
  return v;
}

Vec make_vec(std::initializer_list<long> coords) {
  Vec v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch in pairing: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in sum");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in difference");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec negate(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& c : a) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Rational sup_norm(const Vec& a) {
  Rational m = 0;
  for (const auto& c : a) {
    Rational ac = abs(c);
    if (ac > m) m = ac;
  }
  return m;
}

Vec primitive(const Vec& a) {
  if (is_zero(a)) return a;
  Integer l = 1;
  for (const auto& c : a) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> ints(a.size());
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational scaled = a[i] * Rational(l);
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer q = ints[i] / g;
    r[i] = Rational(q);
  }
  return r;
}

std::string to_string(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += to_string(a[i]);
  }
  return s + ")";
}

void require_dim(const Vec& a, std::size_t n, const char* what) {
  if (a.size() != n) {
    throw InputError(std::string(what) + ": expected dimension " + std::to_string(n) + ", got " +
                     std::to_string(a.size()));
  }
}

}  // namespace snc
