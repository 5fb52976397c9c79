#pragma once

#include "powertower/numeric.hpp"

#include <vector>

namespace powertower {

/// Truncated Taylor expansion of x^x about an anchor a. The anchor 1
/// is special: every coefficient f^(k)(1)/k! is an exact rational, and
/// the series carries both the exact coefficients and their double
/// renderings. At any other anchor only doubles are available (ln a is
/// transcendental), and exact_coeffs stays empty. The representation
/// keeps the two cases explicit instead of silently mixing them.
struct TaylorSeries {
  bool anchor_is_one = false;
  double anchor = 1.0;
  int order = 0;
  std::vector<BigRat> exact_coeffs;  // filled only when anchor_is_one
  std::vector<double> coeffs;        // always filled, size order+1
};

/// Exact series at anchor 1: coeff[k] = Q_k(1) / k!.
TaylorSeries taylor_at_one(int order);

/// Floating series at a positive anchor: coeff[k] = f^(k)(a) / k!.
/// Throws std::invalid_argument for anchor <= 0.
TaylorSeries taylor_at(double anchor, int order);

/// sum_{k=0}^{n} coeff[k] (x - a)^k. At anchor 1 the sum runs in exact
/// rationals (x taken at its exact dyadic value) and is rounded once at
/// the end; elsewhere it is a double Horner evaluation.
/// Requires n <= series.order.
double evaluate_partial(const TaylorSeries& series, double x, int n);

/// The all-double evaluation path, available at any anchor.
double evaluate_partial_float(const TaylorSeries& series, double x, int n);

/// Exact partial sum at anchor 1 for rational x.
BigRat evaluate_partial_exact(const TaylorSeries& series, const BigRat& x, int n);

struct EvalRow {
  int n = 0;
  double value = 0.0;
  double abs_error = 0.0;  // |value - direct|, meaningful when has_direct
};

/// Partial-sum table for one evaluation point, with the direct value
/// x^x (when x > 0) for comparison.
struct EvalReport {
  double x = 0.0;
  bool anchor_is_one = false;
  double anchor = 1.0;
  bool has_direct = false;
  double direct_value = 0.0;
  std::vector<EvalRow> rows;
};

/// Partial sums at each checkpoint order. Checkpoints must be
/// non-decreasing and bounded by series.order (std::invalid_argument
/// otherwise).
EvalReport convergence_report(const TaylorSeries& series, double x,
                              const std::vector<int>& checkpoints);

}  // namespace powertower
