#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctkit/rational.hpp"

namespace ctkit {

// Conductors are kept small in practice (they divide element orders of the
// groups under study); this bound is a resource guard, not a math limit.
inline constexpr int kMaxConductor = 100000;

int euler_phi(int n);

// Phi_n as integer coefficients, constant term first, monic. Computed by
// exact division of x^n - 1 by Phi_d over the proper divisors d of n.
// Memoized; safe to call from multiple threads.
const std::vector<Integer>& cyclotomic_polynomial(int n);

// Element of the cyclotomic field Q(zeta_n). The representation is the
// unique residue modulo Phi_n: coefficients c_0..c_{phi(n)-1} encoding
// sum c_e * zeta_n^e. The conductor is part of the value and is never
// minimized; values at different conductors compare equal exactly when
// their lifts to the least common conductor have identical coefficients.
class Cyclotomic {
 public:
  // Rational zero at conductor 1.
  Cyclotomic() : conductor_(1), coeffs_(1) {}

  // A rational value at conductor 1.
  explicit Cyclotomic(const Rational& value)
      : conductor_(1), coeffs_{value} {}

  // Builds sum coeff * zeta_conductor^exponent and reduces mod Phi_n.
  // Exponents must be strictly increasing within [0, conductor).
  static Cyclotomic from_terms(
      int conductor, const std::vector<std::pair<int, Rational>>& terms);

  int conductor() const { return conductor_; }
  // deg Phi_n = phi(conductor); the number of stored coefficients.
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const Rational& coeff(int exponent) const { return coeffs_[exponent]; }

  bool is_zero() const;
  // True when the only possibly-nonzero coefficient sits at exponent 0.
  bool is_rational() const;

  // Nonzero (exponent, coefficient) pairs in ascending exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  // Diagnostic form, e.g. "-1/2 + z5^2 @5".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

  friend Cyclotomic conjugate(const Cyclotomic& a);
  friend Cyclotomic lift(const Cyclotomic& a, int conductor);
  friend Cyclotomic root_of_unity(int n, long long k);

 private:
  Cyclotomic(int conductor, std::vector<Rational> reduced)
      : conductor_(conductor), coeffs_(std::move(reduced)) {}

  int conductor_;
  std::vector<Rational> coeffs_;
};

// zeta_n^k at conductor n; k is reduced mod n first.
Cyclotomic root_of_unity(int n, long long k);

// Complex conjugation: the substitution zeta_n -> zeta_n^(n-1), reduced.
Cyclotomic conjugate(const Cyclotomic& a);

// Same value re-expressed at conductor n via zeta_m = zeta_n^(n/m).
// The conductor of a must divide n.
Cyclotomic lift(const Cyclotomic& a, int conductor);

// The rational value when every exponent >= 1 coefficient vanishes.
std::optional<Rational> try_rational(const Cyclotomic& a);

}  // namespace ctkit
