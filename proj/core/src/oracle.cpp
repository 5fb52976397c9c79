#include "powertower/oracle.hpp"

#include "powertower/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace powertower::oracle {

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), BigRat(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
  // Truncate to the shorter order: beyond it coefficients would be
  // incomplete convolutions.
  const int n = std::min(a.order(), b.order());
  FormalSeries r;
  r.coeffs.assign(n + 1, BigRat(0));
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs[j] == 0) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

FormalSeries series_exp(const FormalSeries& g) {
  if (g.coeffs.empty() || g.coeffs[0] != 0) {
    throw std::invalid_argument("series_exp: needs zero constant term");
  }
  const int n = g.order();
  FormalSeries e;
  e.coeffs.assign(n + 1, BigRat(0));
  e.coeffs[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigRat s = 0;
    for (int j = 1; j <= m; ++j) s += j * g.coeffs[j] * e.coeffs[m - j];
    e.coeffs[m] = s / m;
  }
  return e;
}

FormalSeries series_at_one(int order) {
  if (order < 0) throw std::invalid_argument("series_at_one: order must be >= 0");
  // ln(1+u) = sum_{k>=1} (-1)^(k+1) u^k / k, truncated.
  FormalSeries log1p;
  log1p.coeffs.assign(order + 1, BigRat(0));
  for (int k = 1; k <= order; ++k) {
    log1p.coeffs[k] = BigRat(k % 2 == 1 ? 1 : -1, k);
  }
  // (1+u) ln(1+u): shift-add, still truncated at `order`.
  FormalSeries g = log1p;
  for (int k = order; k >= 1; --k) g.coeffs[k] += log1p.coeffs[k - 1];
  return series_exp(g);
}

double default_step(int n, double x) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(1.0, x) * std::pow(eps, 1.0 / (n + 2));
}

namespace {

// Central n-th difference over the n+1 equally spaced points
// x + (n/2 - j) h, j = 0..n, divided by h^n. Signed binomial weights.
double central_estimate(int n, double x, double h, double* max_abs_f) {
  double acc = 0.0;
  double peak = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double t = x + (n / 2.0 - j) * h;
    if (t <= 0.0) {
      throw std::invalid_argument("finite_difference: stencil point at or below zero");
    }
    const double f = std::pow(t, t);
    peak = std::max(peak, std::fabs(f));
    const double w = to_double(BigRat(binomial(n, j)));
    acc += (j % 2 == 0 ? w : -w) * f;
  }
  if (max_abs_f) *max_abs_f = std::max(*max_abs_f, peak);
  return acc / std::pow(h, n);
}

}  // namespace

FiniteDiffResult finite_difference(int n, double x, double h) {
  if (n < 0) throw std::invalid_argument("finite_difference: n must be >= 0");
  if (n > 6) {
    throw std::invalid_argument(
        "finite_difference: supported for n <= 6; cancellation dominates beyond");
  }
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::invalid_argument("finite_difference: requires finite x > 0");
  }
  if (!std::isfinite(h) || h <= 0.0) {
    throw std::invalid_argument("finite_difference: requires finite h > 0");
  }
  FiniteDiffResult r;
  r.order = n;
  r.x = x;
  if (n == 0) {
    r.value = std::pow(x, x);
    r.error_bound = 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(r.value) +
                    std::numeric_limits<double>::denorm_min();
    return r;
  }
  double max_abs_f = 0.0;
  const double coarse = central_estimate(n, x, h, &max_abs_f);
  const double fine = central_estimate(n, x, h / 2, &max_abs_f);
  // One Richardson step: the central scheme has even error expansion,
  // leading term h^2, so E = fine + (fine - coarse) / 3.
  r.value = fine + (fine - coarse) / 3.0;
  // Residual of the extrapolation plus the roundoff floor of the fine
  // estimate: ~2^n eps max|f| / (h/2)^n, doubled for safety margin.
  const double eps = std::numeric_limits<double>::epsilon();
  const double noise = std::ldexp(eps * max_abs_f, n) / std::pow(h / 2, n);
  r.error_bound = 2.0 * (std::fabs(fine - coarse) / 3.0 + noise) +
                  std::numeric_limits<double>::denorm_min();
  return r;
}

FiniteDiffResult finite_difference(int n, double x) {
  return finite_difference(n, x, default_step(n, x));
}

BigInt brute_force_rencontres(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("brute_force_rencontres: negative argument");
  if (k > n) throw std::invalid_argument("brute_force_rencontres: k must not exceed n");
  if (n > 9) throw std::invalid_argument("brute_force_rencontres: limited to n <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    int fixed = 0;
    for (int i = 0; i < n; ++i) fixed += perm[i] == i;
    count += fixed == k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace powertower::oracle
