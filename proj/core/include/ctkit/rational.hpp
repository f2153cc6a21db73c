#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ctkit {

// Arbitrary-precision integer. Group orders of the largest supported tables
// exceed 64 bits, so fixed-width integers are never used for mathematical
// quantities anywhere in the toolkit. Floating point is banned outright.
using Integer = mpz_class;

// Canonical decimal integer strings: optional '-', no leading zeros, no
// "-0", no whitespace or signs beyond the leading minus.
bool is_canonical_integer_string(const std::string& text);

// Parses a canonical decimal integer string; throws ParseError otherwise.
Integer parse_integer(const std::string& text);

std::string integer_str(const Integer& value);

// Exact rational scalar, always held in canonical form: gcd(|numerator|,
// denominator) = 1 and denominator >= 1. Equal values therefore have
// identical representations, and equality is plain representation equality.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long value) : value_(value) {}
  explicit Rational(const Integer& value) : value_(value) {}
  // Canonicalizes; denominator must be nonzero.
  Rational(const Integer& numerator, const Integer& denominator);

  // Accepts only canonical strings: "0", "-4", "2/3", "-7/9". Unreduced
  // fractions, "a/1", "-0", and leading zeros are rejected.
  static Rational parse(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Canonical string form, digits only: "a" when integral, "a/b" otherwise.
  std::string str() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  mpq_class value_;
};

}  // namespace ctkit
