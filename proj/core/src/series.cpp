#include "powertower/series.hpp"

#include "powertower/combinatorics.hpp"
#include "powertower/derivative.hpp"
#include "powertower/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace powertower {

TaylorSeries taylor_at_one(int order) {
  if (order < 0) throw std::invalid_argument("taylor_at_one: order must be >= 0");
  TaylorSeries s;
  s.anchor_is_one = true;
  s.anchor = 1.0;
  s.order = order;
  s.exact_coeffs.reserve(order + 1);
  s.coeffs.reserve(order + 1);
  BigInt kfact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfact *= k;
    BigRat c(derivative_at_one(k), kfact);
    s.coeffs.push_back(to_double(c));
    s.exact_coeffs.push_back(std::move(c));
  }
  return s;
}

TaylorSeries taylor_at(double anchor, int order) {
  if (order < 0) throw std::invalid_argument("taylor_at: order must be >= 0");
  if (!std::isfinite(anchor) || anchor <= 0.0) {
    throw std::invalid_argument("taylor_at: requires finite anchor > 0");
  }
  if (anchor == 1.0) return taylor_at_one(order);
  TaylorSeries s;
  s.anchor_is_one = false;
  s.anchor = anchor;
  s.order = order;
  s.coeffs.reserve(order + 1);
  double kfact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfact *= k;
    const DerivativeValue d = derivative_eval(k, anchor, DerivativeMethod::closed);
    s.coeffs.push_back(d.value / kfact);
  }
  return s;
}

BigRat evaluate_partial_exact(const TaylorSeries& series, const BigRat& x, int n) {
  if (!series.anchor_is_one) {
    throw std::invalid_argument("evaluate_partial_exact: needs the anchor-one series");
  }
  if (n < 0 || n > series.order) {
    throw std::invalid_argument("evaluate_partial_exact: n out of range");
  }
  const BigRat u = x - 1;
  BigRat acc = 0;
  for (int k = n; k >= 0; --k) acc = acc * u + series.exact_coeffs[k];
  return acc;
}

double evaluate_partial_float(const TaylorSeries& series, double x, int n) {
  if (n < 0 || n > series.order) {
    throw std::invalid_argument("evaluate_partial_float: n out of range");
  }
  const double u = x - series.anchor;
  double acc = 0.0;
  for (int k = n; k >= 0; --k) acc = acc * u + series.coeffs[k];
  return acc;
}

double evaluate_partial(const TaylorSeries& series, double x, int n) {
  if (series.anchor_is_one && std::isfinite(x)) {
    return to_double(evaluate_partial_exact(series, rational_from_double(x), n));
  }
  return evaluate_partial_float(series, x, n);
}

EvalReport convergence_report(const TaylorSeries& series, double x,
                              const std::vector<int>& checkpoints) {
  int prev = 0;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const int n = checkpoints[i];
    if (n < 0 || n > series.order) {
      throw std::invalid_argument("convergence_report: checkpoint out of range");
    }
    if (i > 0 && n < prev) {
      throw std::invalid_argument("convergence_report: checkpoints must be non-decreasing");
    }
    prev = n;
  }
  EvalReport report;
  report.x = x;
  report.anchor_is_one = series.anchor_is_one;
  report.anchor = series.anchor;
  if (x > 0.0 && std::isfinite(x)) {
    report.has_direct = true;
    report.direct_value = std::pow(x, x);
  }
  report.rows.reserve(checkpoints.size());
  for (int n : checkpoints) {
    EvalRow row;
    row.n = n;
    row.value = evaluate_partial(series, x, n);
    row.abs_error = report.has_direct ? std::fabs(row.value - report.direct_value) : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace powertower
