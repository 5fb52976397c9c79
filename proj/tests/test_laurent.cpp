#include "powertower/laurent.hpp"

#include "powertower/combinatorics.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace powertower;

TEST_CASE("construction and canonical form") {
  const LaurentPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.to_string() == "0");
  CHECK_THROWS_AS(zero.degree(), std::logic_error);
  CHECK_THROWS_AS(zero.lowest_exponent(), std::logic_error);

  const LaurentPoly c = LaurentPoly::constant(BigRat(5));
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == 5);
  CHECK(c.to_string() == "5");

  // Zero coefficients are never stored.
  CHECK(LaurentPoly::term(3, BigRat(0)).is_zero());
  LaurentPoly p = LaurentPoly::term(2, BigRat(1));
  p += LaurentPoly::term(2, BigRat(-1));
  CHECK(p.is_zero());
}

TEST_CASE("arithmetic, scaling, shifting, derivative") {
  LaurentPoly p = LaurentPoly::term(2, BigRat(3)) + LaurentPoly::term(0, BigRat(-1));
  const LaurentPoly q = LaurentPoly::term(2, BigRat(-3)) + LaurentPoly::term(-1, BigRat(2));

  const LaurentPoly sum = p + q;
  CHECK(sum.coeff(2) == 0);
  CHECK(sum.coeff(0) == -1);
  CHECK(sum.coeff(-1) == 2);
  CHECK(sum.to_string() == "-1 + 2/x");

  CHECK((p - p).is_zero());
  CHECK((-p).coeff(2) == -3);
  CHECK(p.scaled(BigRat(0)).is_zero());
  CHECK(p.scaled(BigRat(1, 3)).coeff(2) == 1);
  CHECK(p.shifted(-2).coeff(0) == 3);
  CHECK(p.shifted(-2).coeff(-2) == -1);

  // d/dx (3x^2 - 1) = 6x; the constant term vanishes, x^-1 appears
  // from negative exponents only.
  CHECK(p.derivative().to_string() == "6x");
  CHECK(LaurentPoly::term(-1, BigRat(1)).derivative().to_string() == "-1/x^2");
}

TEST_CASE("exact and floating evaluation") {
  // 2x^3 - x + 1/x at x = 1/2: 1/4 - 1/2 + 2 = 7/4.
  LaurentPoly p = LaurentPoly::term(3, BigRat(2)) + LaurentPoly::term(1, BigRat(-1)) +
                  LaurentPoly::term(-1, BigRat(1));
  CHECK(p.eval(BigRat(1, 2)) == BigRat(7, 4));
  CHECK(p.eval(BigRat(-2)) == BigRat(-29, 2));  // -16 + 2 - 1/2
  CHECK(p.eval_double(0.5) == doctest::Approx(1.75).epsilon(1e-14));
  CHECK_THROWS_AS(p.eval(BigRat(0)), std::invalid_argument);

  const LaurentPoly poly_only = LaurentPoly::term(2, BigRat(4));
  CHECK(poly_only.eval(BigRat(0)) == 0);
  CHECK(LaurentPoly().eval(BigRat(0)) == 0);
  CHECK(LaurentPoly().eval_double(3.0) == 0.0);
}

TEST_CASE("rendering matches the canonical forms") {
  const LaurentPoly p4 = poly_p(4);
  CHECK(p4.to_string() == "x^3 + 3x^2 - 3x + 2");
  CHECK(poly_p(1).to_string() == "1");
  CHECK(poly_q(0).to_string() == "1/x");
  CHECK(poly_q(4).to_string() == "x^3 + 6x^2 - x + 2");
  CHECK(delta_closed(3, 3).to_string() == "1 + 3/x - 1/x^2");
  const LaurentPoly mixed =
      LaurentPoly::term(1, BigRat(-1, 2)) + LaurentPoly::term(-2, BigRat(1, 3));
  CHECK(mixed.to_string() == "-(1/2)x + (1/3)/x^2");
}

TEST_CASE("P family: coefficients, degree, derivative chain") {
  for (int n = 1; n <= 25; ++n) {
    const LaurentPoly p = poly_p(n);
    CAPTURE(n);
    CHECK(p.degree() == n - 1);
    CHECK(p.coeff(n - 1) == 1);
    for (int i = 0; i <= n - 1; ++i) {
      CHECK(p.coeff(n - 1 - i) == BigRat(omega_recursive(n, i)));
    }
    if (n >= 2) CHECK(p.derivative() == poly_p(n - 1).scaled(BigRat(n - 1)));
  }
  CHECK_THROWS_AS(poly_p(0), std::invalid_argument);
}

TEST_CASE("P family: k-th derivative identity and terminal constant") {
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      LaurentPoly expect = poly_p(n);
      for (int j = 0; j < k; ++j) expect = expect.derivative();
      CAPTURE(n);
      CAPTURE(k);
      CHECK(poly_p_kth_derivative(n, k) == expect);
    }
    CHECK(poly_p_kth_derivative(n, n - 1) ==
          LaurentPoly::constant(BigRat(factorial(n - 1))));
    CHECK(poly_p_kth_derivative(n, n).is_zero());
    CHECK(poly_p_kth_derivative(n, n + 5).is_zero());
  }
}

TEST_CASE("Q family: monic integer polynomials with reference values at 1") {
  const long long at_one[9] = {1, 1, 2, 3, 8, 10, 54, -42, 944};
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(poly_q(k).eval(BigRat(1)) == BigRat(at_one[k]));
  }
  for (int k = 1; k <= 25; ++k) {
    const LaurentPoly q = poly_q(k);
    CAPTURE(k);
    CHECK(q.degree() == k - 1);
    CHECK(q.lowest_exponent() >= 0);
    CHECK(q.coeff(k - 1) == 1);
    for (const auto& [e, c] : q.terms()) CHECK(is_integral(c));
  }
  CHECK_THROWS_AS(poly_q(-1), std::invalid_argument);
}

TEST_CASE("delta family: recursion equals closed form, structure holds") {
  for (int n = 0; n <= 15; ++n) {
    for (int k = 0; k <= n + 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(delta_recursive(n, k) == delta_closed(n, k));
    }
  }
  CHECK(delta_recursive(7, 9).is_zero());
  CHECK(delta_recursive(7, 0) == LaurentPoly::constant(BigRat(1)));
  for (int n = 1; n <= 15; ++n) {
    for (int k = 1; k <= n; ++k) {
      const LaurentPoly d = delta_recursive(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(d.degree() == 0);
      CHECK(d.coeff(0) == BigRat(binomial(n, k)));
      CHECK(d.lowest_exponent() >= -(k - 1));
    }
  }
}

TEST_CASE("omega-binomial transfer identity") {
  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int i = 0; i <= k; ++i) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(i);
        CHECK(omega_binomial_identity_holds(n, k, i));
      }
    }
  }
  CHECK_THROWS_AS(omega_binomial_identity_holds(3, 3, 1), std::invalid_argument);
}
