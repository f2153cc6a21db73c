#include "ctkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

void check_conductor(int n) {
  if (n < 1) throw DataError("conductor must be a positive integer");
  if (n > kMaxConductor) {
    throw DataError("conductor " + std::to_string(n) +
                    " exceeds the supported bound " +
                    std::to_string(kMaxConductor));
  }
}

int lcm_conductor(int a, int b) {
  const long long l = std::lcm<long long>(a, b);
  if (l > kMaxConductor) {
    throw DataError("least common conductor lcm(" + std::to_string(a) + "," +
                    std::to_string(b) + ") exceeds the supported bound");
  }
  return static_cast<int>(l);
}

// Quotient of num by the monic polynomial den over Z; the division must be
// exact. Coefficients are constant-term first.
std::vector<Integer> divide_exact(std::vector<Integer> num,
                                  const std::vector<Integer>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) throw std::logic_error("cyclotomic division underflow");
  std::vector<Integer> quot(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    const Integer c = num[i];
    if (sgn(c) == 0) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) {
      num[i - dd + j] -= c * den[j];
    }
  }
  for (const Integer& c : num) {
    if (sgn(c) != 0) throw std::logic_error("cyclotomic division not exact");
  }
  return quot;
}

// Reduces a coefficient vector (exponent i holds the coefficient of
// zeta_n^i) modulo Phi_n and trims it to length phi(n).
std::vector<Rational> reduce_mod_phi(int n, std::vector<Rational> poly) {
  const std::vector<Integer>& phi = cyclotomic_polynomial(n);
  const int d = static_cast<int>(phi.size()) - 1;
  if (static_cast<int>(poly.size()) < d) poly.resize(d);
  for (int i = static_cast<int>(poly.size()) - 1; i >= d; --i) {
    if (poly[i].is_zero()) continue;
    const Rational c = poly[i];
    poly[i] = Rational();
    for (int j = 0; j < d; ++j) {
      poly[i - d + j] -= c * Rational(phi[j]);
    }
  }
  poly.resize(d);
  return poly;
}

std::vector<Rational> lift_coeffs(const Cyclotomic& a, int n) {
  const int m = a.conductor();
  const int step = n / m;
  std::vector<Rational> poly(static_cast<size_t>(n), Rational());
  for (int e = 0; e < a.degree(); ++e) {
    if (!a.coeff(e).is_zero()) poly[static_cast<size_t>(e) * step] = a.coeff(e);
  }
  return reduce_mod_phi(n, std::move(poly));
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw DataError("euler_phi of a nonpositive integer");
  int result = n;
  int rest = n;
  for (int p = 2; static_cast<long long>(p) * p <= rest; ++p) {
    if (rest % p != 0) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  check_conductor(n);
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache{{1, {Integer(-1), Integer(1)}}};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Populate the proper divisors first, outside the lock; recursion depth is
  // bounded by the divisor count and double computation is harmless.
  std::vector<int> divisors;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      cyclotomic_polynomial(d);
    }
  }
  std::vector<Integer> poly(static_cast<size_t>(n) + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (int d : divisors) {
    poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  if (static_cast<int>(poly.size()) - 1 != euler_phi(n)) {
    throw std::logic_error("cyclotomic polynomial degree mismatch");
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic Cyclotomic::from_terms(
    int conductor, const std::vector<std::pair<int, Rational>>& terms) {
  check_conductor(conductor);
  std::vector<Rational> poly(static_cast<size_t>(conductor), Rational());
  int previous = -1;
  for (const auto& [exponent, value] : terms) {
    if (exponent <= previous) {
      throw DataError("cyclotomic terms must have strictly increasing exponents");
    }
    if (exponent >= conductor) {
      throw DataError("cyclotomic exponent " + std::to_string(exponent) +
                      " out of range for conductor " + std::to_string(conductor));
    }
    poly[exponent] = value;
    previous = exponent;
  }
  return Cyclotomic(conductor, reduce_mod_phi(conductor, std::move(poly)));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t e = 1; e < coeffs_.size(); ++e) {
    if (!coeffs_[e].is_zero()) return false;
  }
  return true;
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<int, Rational>> result;
  for (int e = 0; e < degree(); ++e) {
    if (!coeffs_[e].is_zero()) result.emplace_back(e, coeffs_[e]);
  }
  return result;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = lcm_conductor(a.conductor_, b.conductor_);
  std::vector<Rational> left =
      (a.conductor_ == n) ? a.coeffs_ : lift_coeffs(a, n);
  const std::vector<Rational> right =
      (b.conductor_ == n) ? b.coeffs_ : lift_coeffs(b, n);
  for (size_t e = 0; e < left.size(); ++e) left[e] += right[e];
  return Cyclotomic(n, std::move(left));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> negated(coeffs_.size());
  for (size_t e = 0; e < coeffs_.size(); ++e) negated[e] = -coeffs_[e];
  return Cyclotomic(conductor_, std::move(negated));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = lcm_conductor(a.conductor_, b.conductor_);
  // Rational factors scale coefficient-wise; no convolution needed.
  if (a.is_rational() || b.is_rational()) {
    const Rational scale = a.is_rational() ? a.coeffs_[0] : b.coeffs_[0];
    const Cyclotomic& other = a.is_rational() ? b : a;
    std::vector<Rational> result =
        (other.conductor_ == n) ? other.coeffs_ : lift_coeffs(other, n);
    for (Rational& c : result) c *= scale;
    return Cyclotomic(n, std::move(result));
  }
  const std::vector<Rational> left =
      (a.conductor_ == n) ? a.coeffs_ : lift_coeffs(a, n);
  const std::vector<Rational> right =
      (b.conductor_ == n) ? b.coeffs_ : lift_coeffs(b, n);
  std::vector<Rational> product(left.size() + right.size() - 1, Rational());
  for (size_t i = 0; i < left.size(); ++i) {
    if (left[i].is_zero()) continue;
    for (size_t j = 0; j < right.size(); ++j) {
      if (right[j].is_zero()) continue;
      product[i + j] += left[i] * right[j];
    }
  }
  return Cyclotomic(n, reduce_mod_phi(n, std::move(product)));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int n = lcm_conductor(a.conductor_, b.conductor_);
  return lift_coeffs(a, n) == lift_coeffs(b, n);
}

Cyclotomic root_of_unity(int n, long long k) {
  check_conductor(n);
  long long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational());
  poly[static_cast<size_t>(e)] = Rational(1);
  return Cyclotomic(n, reduce_mod_phi(n, std::move(poly)));
}

Cyclotomic conjugate(const Cyclotomic& a) {
  if (a.is_rational()) return a;
  const int n = a.conductor_;
  std::vector<Rational> poly(static_cast<size_t>(n), Rational());
  for (int e = 0; e < a.degree(); ++e) {
    if (a.coeffs_[e].is_zero()) continue;
    poly[e == 0 ? 0 : n - e] += a.coeffs_[e];
  }
  return Cyclotomic(n, reduce_mod_phi(n, std::move(poly)));
}

Cyclotomic lift(const Cyclotomic& a, int conductor) {
  check_conductor(conductor);
  if (conductor % a.conductor_ != 0) {
    throw DataError("lift: conductor " + std::to_string(a.conductor_) +
                    " does not divide " + std::to_string(conductor));
  }
  if (conductor == a.conductor_) return a;
  return Cyclotomic(conductor, lift_coeffs(a, conductor));
}

std::optional<Rational> try_rational(const Cyclotomic& a) {
  if (!a.is_rational()) return std::nullopt;
  return a.coeff(0);
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (e == 0) {
      os << magnitude.str();
    } else {
      if (magnitude != Rational(1)) os << magnitude.str() << "*";
      os << "z" << conductor_;
      if (e > 1) os << "^" << e;
    }
  }
  os << " @" << conductor_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) {
  return os << value.str();
}

}  // namespace ctkit
