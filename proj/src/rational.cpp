#include "snc/rational.hpp"

#include <cctype>

namespace snc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

const Rational& ExtendedValue::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite ExtendedValue");
  return value_;
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedValue::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  auto rank = [](ExtendedValue::Kind k) {
    switch (k) {
      case ExtendedValue::Kind::NegInf: return 0;
      case ExtendedValue::Kind::Finite: return 1;
      case ExtendedValue::Kind::PosInf: return 2;
    }
    return 1;
  };
  if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
  if (a.kind_ != ExtendedValue::Kind::Finite) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ExtendedValue& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return to_string(v.value());
}

ExtendedValue parse_extended(std::string_view text) {
  if (text == "inf" || text == "+inf") return ExtendedValue::pos_inf();
  if (text == "-inf") return ExtendedValue::neg_inf();
  return ExtendedValue(parse_rational(text));
}

}  // namespace snc

namespace snc {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational root(Integer(sqrt(num)), Integer(sqrt(den)));
  root.canonicalize();
  return root;
}

}  // namespace snc
