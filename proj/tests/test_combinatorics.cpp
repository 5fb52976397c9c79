#include "powertower/combinatorics.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace powertower;

TEST_CASE("factorial and binomial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);

  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(10, 7) == 120);
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial(3, -2), std::invalid_argument);
}

TEST_CASE("omega table reproduces the nine reference rows") {
  const long long want[9][9] = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 2, -1, 0, 0, 0, 0, 0, 0},
      {1, 3, -3, 2, 0, 0, 0, 0, 0},
      {1, 4, -6, 8, -6, 0, 0, 0, 0},
      {1, 5, -10, 20, -30, 24, 0, 0, 0},
      {1, 6, -15, 40, -90, 144, -120, 0, 0},
      {1, 7, -21, 70, -210, 504, -840, 720, 0},
      {1, 8, -28, 112, -420, 1344, -3360, 5760, -5040},
  };
  const OmegaTable table(9);
  for (int a = 1; a <= 9; ++a) {
    for (int b = 0; b <= 8; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(table.at(a, b) == want[a - 1][b]);
    }
  }
}

TEST_CASE("omega boundary and validation behavior") {
  const OmegaTable table(12);
  CHECK(table.at(1, 1) == 0);
  CHECK(table.at(7, 7) == 0);
  CHECK(table.at(7, 11) == 0);
  CHECK(table.at(12, 0) == 1);
  CHECK_THROWS_AS(table.at(0, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(13, 1), std::out_of_range);
  CHECK_THROWS_AS(table.at(3, -1), std::out_of_range);

  CHECK(omega_recursive(40, 1) == 39);
  CHECK(omega_recursive(9, 8) == -5040);
  CHECK_THROWS_AS(omega_recursive(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(omega_closed(5, 0), std::invalid_argument);
}

TEST_CASE("three omega routes agree beyond the reference rows") {
  for (int a = 1; a <= 40; ++a) {
    for (int b = 1; b < a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(omega_recursive(a, b) == omega_closed(a, b));
      CHECK(omega_recursive(a, b) == omega_alt_recursive(a, b));
    }
  }
  // Entries past 64-bit range still come out exactly.
  CHECK(omega_closed(30, 20) == omega_recursive(30, 20));
  CHECK(omega_closed(26, 25) == factorial(24));  // (-1)^26 24! C(25,25)
}

TEST_CASE("partial sums of omega columns") {
  CHECK(partial_sum(0, 7) == 7);
  CHECK(partial_sum(1, 5) == 10);
  CHECK(partial_sum(2, 9) == -84);
  CHECK(partial_sum(5, 5) == 0);  // empty sum when n <= i
  CHECK(partial_sum_closed(2, 9) == -84);
  for (int n = 1; n <= 40; ++n) {
    for (int i = 1; i < n; ++i) {
      CAPTURE(i);
      CAPTURE(n);
      CHECK(partial_sum(i, n) == partial_sum_closed(i, n));
    }
  }
  CHECK_THROWS_AS(partial_sum(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum_closed(0, 5), std::invalid_argument);
}

TEST_CASE("subfactorial and rencontres numbers") {
  const long long derangements[10] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496};
  for (int m = 0; m <= 9; ++m) {
    CAPTURE(m);
    CHECK(subfactorial(m) == derangements[m]);
  }
  CHECK(rencontres(3, 1) == 3);
  CHECK(rencontres(4, 0) == 9);
  CHECK(rencontres(9, 3) == 84 * 265);
  CHECK(rencontres(6, 6) == 1);
  CHECK_THROWS_AS(rencontres(3, 4), std::invalid_argument);

  const RencontresTable table(12);
  BigInt row_sum = 0;
  for (int k = 0; k <= 12; ++k) row_sum += table.at(12, k);
  CHECK(row_sum == factorial(12));
  CHECK_THROWS_AS(table.at(13, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(5, 6), std::out_of_range);
}

TEST_CASE("lambda constants and the rencontres route to omega") {
  CHECK(lambda_constant(2) == BigRat(-1));
  CHECK(lambda_constant(3) == BigRat(1));
  CHECK(lambda_constant(4) == BigRat(-2, 3));
  CHECK_THROWS_AS(lambda_constant(1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_constant(0), std::invalid_argument);

  for (int n = 3; n <= 25; ++n) {
    for (int k = 2; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(omega_from_rencontres(n, k) == omega_recursive(n, k));
    }
  }
  CHECK_THROWS_AS(omega_from_rencontres(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(omega_from_rencontres(5, 5), std::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(to_string(BigInt(-7)) == "-7");
  CHECK(to_string(BigRat(10)) == "10");
  CHECK(to_string(BigRat(-2, 3)) == "-2/3");
  CHECK(is_integral(BigRat(4, 2)));
  CHECK_FALSE(is_integral(BigRat(1, 3)));
  CHECK(rational_from_double(0.5) == BigRat(1, 2));
  CHECK(rational_from_double(-1.25) == BigRat(-5, 4));
  CHECK(rational_from_double(3.0) == BigRat(3));
  // 0.1 is not dyadic; its double is the exact nearby dyadic.
  CHECK(rational_from_double(0.1) ==
        BigRat(BigInt("3602879701896397"), BigInt("36028797018963968")));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(rational_from_double(1.0 / 0.0), std::invalid_argument);
}
