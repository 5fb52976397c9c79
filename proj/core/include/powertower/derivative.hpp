#pragma once

#include "powertower/laurent.hpp"

#include <string>
#include <vector>

namespace powertower {

enum class DerivativeMethod { recursive, closed };

const char* method_name(DerivativeMethod m);

/// Exact symbolic form of the n-th derivative of f(x) = x^x:
///
///   f^(n)(x) = f(x) * sum_j ln_coeffs[j](x) * ln(x)^j
///
/// where each coefficient is a Laurent polynomial. The leading
/// coefficient ln_coeffs[n] is always 1.
struct DerivativeForm {
  int order = 0;
  std::vector<LaurentPoly> ln_coeffs;  // index = power of ln(x), size order+1

  bool operator==(const DerivativeForm& rhs) const = default;

  /// Canonical rendering, descending ln powers:
  /// "f(x)·(ln(x)^2 + 2·ln(x) + 1 + 1/x)".
  std::string to_string() const;
};

/// Build the form by the derivative recursion: starting from G_0 = 1,
///   G_n = ln(x)·G_{n-1} + sum_{i=0}^{n-1} omega(n, i) x^(-i) G_{n-1-i},
/// computed exactly in the algebra of ln-powers with Laurent
/// coefficients. Memoized process-wide.
DerivativeForm derivative_form_recursive(int n);

/// Build the form directly: the coefficient of ln(x)^(n-i) is
/// delta_closed(n, i).
DerivativeForm derivative_form_closed(int n);

struct DerivativeValue {
  int order = 0;
  double x = 0.0;
  double value = 0.0;
  DerivativeMethod method = DerivativeMethod::closed;
  std::string warning;  // empty when none
};

/// Numeric f^(n)(x) for x > 0: f(x) = exp(x ln x), each coefficient
/// evaluated at x, then a compensated Horner sum in L = ln(x).
/// Throws std::invalid_argument for x <= 0 or non-finite x. Emits a
/// warning (in the result) for x < 0.1 with n >= 8, where the x^(-i)
/// factors amplify roundoff.
DerivativeValue derivative_eval(int n, double x, DerivativeMethod method);

/// f^(n)(1) = Q_n(1), exact.
BigInt derivative_at_one(int n);

}  // namespace powertower
