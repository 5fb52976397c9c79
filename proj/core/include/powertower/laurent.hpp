#pragma once

#include "powertower/numeric.hpp"

#include <map>
#include <string>

namespace powertower {

/// Sparse Laurent polynomial over the rationals: a finitely supported
/// map from integer exponents (negative allowed) to exact coefficients.
/// Canonical form stores no zero coefficients, so operator== is exact
/// structural equality; there are no epsilon comparisons in this class.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // the zero polynomial

  static LaurentPoly constant(BigRat c);
  static LaurentPoly term(int exponent, BigRat coeff);

  bool is_zero() const { return terms_.empty(); }

  /// Highest / lowest stored exponent. Throw on the zero polynomial.
  int degree() const;
  int lowest_exponent() const;

  const std::map<int, BigRat>& terms() const { return terms_; }
  BigRat coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  LaurentPoly scaled(const BigRat& factor) const;

  /// Multiplication by x^s: shifts every exponent by s.
  LaurentPoly shifted(int s) const;

  /// Term-wise formal derivative: c * x^e  ->  c*e * x^(e-1).
  LaurentPoly derivative() const;

  /// Exact evaluation. Throws std::invalid_argument at x = 0 when a
  /// negative exponent is present.
  BigRat eval(const BigRat& x) const;

  double eval_double(double x) const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }

  /// Canonical text form, descending exponents: "x^3 + 3x^2 - 3x + 2",
  /// "1/x", "0".
  std::string to_string() const;

 private:
  std::map<int, BigRat> terms_;

  void set(int exponent, BigRat coeff);
};

/// P_n: the monic polynomial of degree n-1 whose coefficient of
/// x^(n-1-i) is omega(n, i). Satisfies dP_n/dx = (n-1) P_{n-1}.
LaurentPoly poly_p(int n);

/// k-th formal derivative of P_n. For k <= n-1 this equals
/// (-1)^(k+1) * k * omega(n, k) * P_{n-k}; for k > n-1 it is the zero
/// polynomial (formal-derivative semantics, not an error).
LaurentPoly poly_p_kth_derivative(int n, int k);

/// Q_0 = 1/x; Q_k = x * sum_{i=0}^{k-1} omega(k, i) * Q_{k-1-i}.
/// Memoized process-wide (the recursion reuses every lower index).
/// For k >= 1 the result is a monic integer polynomial of degree k-1;
/// that is asserted by the verification suite, not assumed here.
LaurentPoly poly_q(int k);

/// delta(n, k) by its defining recursion, memoized:
///   delta(n, 0) = 1
///   delta(n, k) = delta(n-1, k)
///                 + sum_{i=0}^{k-1} omega(n, i) x^(-i) delta(n-1-i, k-1-i)
///   delta(n, k) = 0 for k > n
LaurentPoly delta_recursive(int n, int k);

/// delta(n, k) = C(n, k) * Q_k(x) / x^(k-1); equals delta_recursive
/// term for term.
LaurentPoly delta_closed(int n, int k);

/// The transfer identity between omega numbers and binomials,
///   omega(n, i) * C(n-1-i, k-i) == omega(k+1, i) * C(n-1, k),
/// exposed as a testable predicate for i <= k < n.
bool omega_binomial_identity_holds(int n, int k, int i);

}  // namespace powertower
