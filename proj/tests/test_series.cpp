#include "powertower/series.hpp"

#include "powertower/combinatorics.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace powertower;

TEST_CASE("exact coefficients at anchor one") {
  const TaylorSeries s = taylor_at_one(8);
  REQUIRE(s.anchor_is_one);
  REQUIRE(s.exact_coeffs.size() == 9);
  REQUIRE(s.coeffs.size() == 9);
  CHECK(s.exact_coeffs[0] == BigRat(1));
  CHECK(s.exact_coeffs[1] == BigRat(1));
  CHECK(s.exact_coeffs[2] == BigRat(1));
  CHECK(s.exact_coeffs[3] == BigRat(1, 2));
  CHECK(s.exact_coeffs[4] == BigRat(1, 3));
  CHECK(s.exact_coeffs[5] == BigRat(1, 12));
  CHECK(s.exact_coeffs[6] == BigRat(3, 40));
  CHECK(s.exact_coeffs[7] == BigRat(-1, 120));
  CHECK(s.exact_coeffs[8] == BigRat(59, 2520));
  for (int k = 0; k <= 8; ++k) CHECK(s.coeffs[k] == to_double(s.exact_coeffs[k]));
  CHECK_THROWS_AS(taylor_at_one(-1), std::invalid_argument);
}

TEST_CASE("partial sums reproduce the seven-digit reference grid") {
  const TaylorSeries s = taylor_at_one(20);
  struct Cell {
    double x;
    int n;
    double want;
  };
  // n = 20, x = 2 is deliberately absent: its published seven-digit
  // reference rounds the n = 15 sum; exact arithmetic gives 4.0015000.
  const Cell grid[8] = {
      {0.5, 5, 0.7057292}, {0.9, 5, 0.9095325}, {2.0, 5, 3.916667},
      {0.5, 10, 0.7070978}, {0.9, 10, 0.9095326}, {2.0, 10, 4.005655},
      {0.5, 20, 0.7071066}, {0.9, 20, 0.9095326},
  };
  for (const Cell& cell : grid) {
    CAPTURE(cell.x);
    CAPTURE(cell.n);
    CHECK(std::fabs(evaluate_partial(s, cell.x, cell.n) - cell.want) <= 5e-7);
  }
  CHECK(std::fabs(evaluate_partial(s, 2.0, 20) - 4.0015000195) <= 5e-9);
}

TEST_CASE("exact partial sums at rational points") {
  const TaylorSeries s = taylor_at_one(5);
  // Order-5 sum at x = 1/2: Horner over {1, 1, 1, 1/2, 1/3, 1/12} at
  // u = -1/2 gives 271/384.
  CHECK(evaluate_partial_exact(s, BigRat(1, 2), 5) == BigRat(271, 384));
  CHECK(evaluate_partial_exact(s, BigRat(1), 5) == BigRat(1));
  CHECK(evaluate_partial_exact(s, BigRat(2), 0) == BigRat(1));
  CHECK_THROWS_AS(evaluate_partial_exact(s, BigRat(1), 6), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_partial_exact(taylor_at(2.0, 3), BigRat(1), 2),
                  std::invalid_argument);
}

TEST_CASE("float path tracks the exact path near the anchor") {
  const TaylorSeries s = taylor_at_one(15);
  for (double x : {0.6, 0.9, 1.0, 1.2, 1.5}) {
    const double exact_path = evaluate_partial(s, x, 15);
    const double float_path = evaluate_partial_float(s, x, 15);
    CAPTURE(x);
    CHECK(float_path == doctest::Approx(exact_path).epsilon(1e-13));
  }

  // Across the whole unit interval around the anchor at order 30 the
  // two routes stay within 1e-9 relative.
  const TaylorSeries deep = taylor_at_one(30);
  for (double x : {0.05, 0.5, 1.7, 2.0}) {
    const double exact_path = evaluate_partial(deep, x, 30);
    const double float_path = evaluate_partial_float(deep, x, 30);
    CAPTURE(x);
    CHECK(float_path == doctest::Approx(exact_path).epsilon(1e-9));
  }
}

TEST_CASE("general anchors approximate nearby values") {
  const TaylorSeries s2 = taylor_at(2.0, 12);
  REQUIRE_FALSE(s2.anchor_is_one);
  CHECK(s2.exact_coeffs.empty());
  CHECK(s2.coeffs[0] == doctest::Approx(4.0).epsilon(1e-14));
  const double got = evaluate_partial(s2, 2.05, 12);
  CHECK(got == doctest::Approx(std::pow(2.05, 2.05)).epsilon(1e-10));
  CHECK_THROWS_AS(taylor_at(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(taylor_at(-1.0, 4), std::invalid_argument);

  // The literal anchor 1 routes to the exact path.
  CHECK(taylor_at(1.0, 4).anchor_is_one);
}

TEST_CASE("convergence reports") {
  const TaylorSeries s = taylor_at_one(20);
  const EvalReport report = convergence_report(s, 0.5, {5, 10, 20});
  CHECK(report.has_direct);
  CHECK(report.direct_value == doctest::Approx(std::pow(0.5, 0.5)).epsilon(1e-15));
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].n == 5);
  CHECK(report.rows[2].n == 20);
  CHECK(report.rows[0].abs_error > report.rows[1].abs_error);
  CHECK(report.rows[1].abs_error > report.rows[2].abs_error);

  CHECK_THROWS_AS(convergence_report(s, 0.5, {10, 5}), std::invalid_argument);
  CHECK_THROWS_AS(convergence_report(s, 0.5, {25}), std::invalid_argument);
  CHECK_THROWS_AS(convergence_report(s, 0.5, {-1}), std::invalid_argument);
}
