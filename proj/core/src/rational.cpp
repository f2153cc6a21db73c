#include "ctkit/rational.hpp"

#include <ostream>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

bool is_canonical_unsigned(const std::string& text) {
  if (text.empty()) return false;
  if (text == "0") return true;
  if (text.front() == '0') return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool is_canonical_integer_string(const std::string& text) {
  if (!text.empty() && text.front() == '-') {
    const std::string rest = text.substr(1);
    return is_canonical_unsigned(rest) && rest != "0";
  }
  return is_canonical_unsigned(text);
}

Integer parse_integer(const std::string& text) {
  if (!is_canonical_integer_string(text)) {
    throw ParseError("non-canonical integer string '" + text + "'");
  }
  return Integer(text, 10);
}

std::string integer_str(const Integer& value) { return value.get_str(); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) {
    throw DataError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto fail = [&text]() -> Rational {
    throw ParseError("non-canonical rational string '" + text + "'");
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_canonical_integer_string(text)) return fail();
    return Rational(Integer(text, 10));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_canonical_integer_string(num) || num == "0") return fail();
  if (!is_canonical_unsigned(den) || den == "0" || den == "1") return fail();
  Rational value(Integer(num, 10), Integer(den, 10));
  // Canonical strings round-trip exactly; anything unreduced does not.
  if (value.str() != text) return fail();
  return value;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ + b.value_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ - b.value_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  r.value_ = a.value_ * b.value_;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DataError("rational division by zero");
  Rational r;
  r.value_ = a.value_ / b.value_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.value_.get_str();
}

}  // namespace ctkit
