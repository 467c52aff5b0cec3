#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snc {

/// Exact scalar. GMP keeps every value canonical (lowest terms, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Bad user-supplied data: malformed numbers, dimension mismatch, schema violations.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition of an operation does not hold for the given data.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// The double description exceeded its configured generator cap.
class SizingError : public std::runtime_error {
 public:
  explicit SizingError(const std::string& what) : std::runtime_error(what) {}
};

/// A hypothesis could not be established from the available evidence, so the
/// operation declines to answer rather than guess.
class RefusedError : public std::runtime_error {
 public:
  explicit RefusedError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws InputError on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Value in the extended real line.
class ExtendedValue {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedValue() = default;
  ExtendedValue(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtendedValue pos_inf() { return ExtendedValue(Kind::PosInf); }
  static ExtendedValue neg_inf() { return ExtendedValue(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  /// Only meaningful when finite.
  const Rational& value() const;

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

 private:
  explicit ExtendedValue(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational value_ = 0;
};

std::string to_string(const ExtendedValue& v);

/// "inf"/"+inf"/"-inf" or a rational.
ExtendedValue parse_extended(std::string_view text);

}  // namespace snc
