#pragma once

#include <span>
#include <string>
#include <vector>

#include "snc/rational.hpp"

namespace snc {

/// Point of R^n or of its dual. The dimension is the length.
using Vec = std::vector<Rational>;

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec make_vec(std::initializer_list<long> coords);

/// Duality pairing <a, b>. Throws InputError on dimension mismatch.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);

/// Largest absolute coordinate.
Rational sup_norm(const Vec& a);

/// Positive multiple of `a` with coprime integer coordinates (zero stays zero).
Vec primitive(const Vec& a);

/// "(p1, p2, ...)" using canonical rational strings.
std::string to_string(const Vec& a);

void require_dim(const Vec& a, std::size_t n, const char* what);

}  // namespace snc
