#pragma once

#include "powertower/numeric.hpp"

#include <vector>

namespace powertower {

/// Ground-truth routes that never touch the main computation paths:
/// formal power-series composition for the anchor-1 expansion, central
/// finite differences for numeric derivatives, and exhaustive
/// permutation enumeration for rencontres counts.
namespace oracle {

/// Truncated formal power series sum c_k u^k with exact rational
/// coefficients. Operations are truncation-stable: order-N inputs give
/// coefficients correct through order N.
struct FormalSeries {
  std::vector<BigRat> coeffs;  // u^0 .. u^N

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);

/// exp of a series with zero constant term, by the recurrence
///   e_0 = 1,  e_m = (1/m) sum_{j=1}^{m} j g_j e_{m-j},
/// exact and O(N^2).
FormalSeries series_exp(const FormalSeries& g);

/// Taylor coefficients of x^x about 1: exp((1+u) ln(1+u)) with
/// u = x - 1, all in exact rationals.
FormalSeries series_at_one(int order);

struct FiniteDiffResult {
  int order = 0;
  double x = 0.0;
  double value = 0.0;
  double error_bound = 0.0;  // always positive
};

/// Step size balancing truncation against roundoff for the n-th
/// derivative at x: max(1, x) * eps^(1/(n+2)).
double default_step(int n, double x);

/// Central-difference estimate of f^(n)(x), f = x^x, on the symmetric
/// stencil (h and h/2) with one Richardson extrapolation step. The
/// reported bound combines the extrapolation residual with a roundoff
/// floor. Supported for n <= 6; beyond that double-precision
/// cancellation makes the estimate weaker than what it checks.
/// Throws std::invalid_argument if any stencil point falls at or below
/// zero, or for n > 6.
FiniteDiffResult finite_difference(int n, double x, double h);
FiniteDiffResult finite_difference(int n, double x);

/// Exact count of permutations of {1..n} with exactly k fixed points,
/// by enumerating all n! permutations. Limited to n <= 9.
BigInt brute_force_rencontres(int n, int k);

}  // namespace oracle
}  // namespace powertower
