#include <doctest.h>

#include "ctkit/cyclotomic.hpp"
#include "ctkit/errors.hpp"

using namespace ctkit;

namespace {

Cyclotomic zeta(int n, long long k = 1) { return root_of_unity(n, k); }

Rational rat(long v) { return Rational(v); }

}  // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});

  // first conductor with a coefficient outside {-1, 0, 1}
  const auto& phi105 = cyclotomic_polynomial(105);
  CHECK(static_cast<int>(phi105.size()) - 1 == 48);
  CHECK(phi105[7] == Integer(-2));
  CHECK(phi105[41] == Integer(-2));
  CHECK(phi105[0] == Integer(1));
  CHECK(phi105[48] == Integer(1));

  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(105) == 48);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), DataError);
  CHECK_THROWS_AS(cyclotomic_polynomial(kMaxConductor + 1), DataError);
}

TEST_CASE("roots of unity reduce to canonical residues") {
  CHECK(root_of_unity(1, 0) == Cyclotomic(rat(1)));
  CHECK(try_rational(root_of_unity(1, 0)) == rat(1));

  const Cyclotomic minus_one = root_of_unity(4, 2);
  CHECK(minus_one.conductor() == 4);
  CHECK(try_rational(minus_one) == rat(-1));

  CHECK(zeta(3, 1) + zeta(3, 2) == Cyclotomic(rat(-1)));

  // exponents reduce mod n, with negative values normalized
  CHECK(zeta(5, -1) == zeta(5, 4));
  CHECK(zeta(5, 12) == zeta(5, 2));
  CHECK(zeta(7, 7) == Cyclotomic(rat(1)));
}

TEST_CASE("ring operations at mixed conductors") {
  const Cyclotomic x = zeta(8) + Cyclotomic(rat(3));
  CHECK(x + Cyclotomic() == x);
  CHECK(zeta(8) * zeta(8, 7) == Cyclotomic(rat(1)));

  // (zeta3 + zeta3^2) * zeta3 = -zeta3
  const Cyclotomic sum_of_cube_roots =
      Cyclotomic::from_terms(3, {{1, rat(1)}, {2, rat(1)}});
  CHECK(try_rational(sum_of_cube_roots) == rat(-1));
  CHECK(sum_of_cube_roots * zeta(3) == -zeta(3));

  // results live at the least common conductor
  const Cyclotomic product = zeta(4) * zeta(3);
  CHECK(product.conductor() == 12);
  CHECK(product == zeta(12, 7));

  const Cyclotomic mixed_sum = zeta(4) + zeta(3);
  CHECK(mixed_sum.conductor() == 12);
  CHECK(mixed_sum - zeta(3) == zeta(4));
}

TEST_CASE("conjugation is the exponent-negating substitution") {
  CHECK(conjugate(Cyclotomic(rat(-7))) == Cyclotomic(rat(-7)));
  const Cyclotomic q = Cyclotomic(Rational(Integer(2), Integer(3)));
  CHECK(conjugate(q) == q);

  // conj(zeta8) = zeta8^7 = -zeta8^3 in reduced form
  const Cyclotomic conj = conjugate(zeta(8));
  CHECK(conj == zeta(8, 7));
  CHECK(conj.degree() == 4);
  CHECK(conj.coeff(0) == rat(0));
  CHECK(conj.coeff(1) == rat(0));
  CHECK(conj.coeff(2) == rat(0));
  CHECK(conj.coeff(3) == rat(-1));

  CHECK(conjugate(conjugate(zeta(7, 3) + zeta(5, 2))) == zeta(7, 3) + zeta(5, 2));
}

TEST_CASE("lift re-expresses values at larger conductors") {
  const Cyclotomic q = Cyclotomic(rat(5));
  const Cyclotomic lifted = lift(q, 9);
  CHECK(lifted.conductor() == 9);
  CHECK(lifted.is_rational());
  CHECK(try_rational(lifted) == rat(5));
  CHECK(lifted == q);

  // zeta3 at conductor 6 is zeta6^2 = zeta6 - 1
  const Cyclotomic z3_at_6 = lift(zeta(3), 6);
  CHECK(z3_at_6 == root_of_unity(6, 2));
  CHECK(z3_at_6.coeff(0) == rat(-1));
  CHECK(z3_at_6.coeff(1) == rat(1));

  CHECK(lift(zeta(8, 3), 8) == zeta(8, 3));
  CHECK_THROWS_AS(lift(zeta(4), 6), DataError);
}

TEST_CASE("rationality detection") {
  CHECK(try_rational(root_of_unity(6, 3)) == rat(-1));
  CHECK(!try_rational(zeta(5)).has_value());
  const Cyclotomic all_fifth_roots = Cyclotomic::from_terms(
      5, {{1, rat(1)}, {2, rat(1)}, {3, rat(1)}, {4, rat(1)}});
  CHECK(try_rational(all_fifth_roots) == rat(-1));
  CHECK(Cyclotomic().is_zero());
  CHECK(!zeta(5).is_zero());
}

TEST_CASE("term construction validates exponents") {
  CHECK_THROWS_AS(Cyclotomic::from_terms(4, {{0, rat(1)}, {0, rat(1)}}),
                  DataError);
  CHECK_THROWS_AS(Cyclotomic::from_terms(4, {{2, rat(1)}, {1, rat(1)}}),
                  DataError);
  CHECK_THROWS_AS(Cyclotomic::from_terms(4, {{4, rat(1)}}), DataError);
  // exponents in [phi(n), n) are legal input and reduce
  CHECK(Cyclotomic::from_terms(4, {{2, rat(1)}}) == Cyclotomic(rat(-1)));
  CHECK(Cyclotomic::from_terms(3, {{2, rat(1)}}) == zeta(3, 2));
}
