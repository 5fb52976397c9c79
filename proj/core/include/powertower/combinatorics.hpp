#pragma once

#include "powertower/numeric.hpp"

#include <vector>

namespace powertower {

BigInt factorial(int n);

/// C(n, k); zero when k > n or k < 0.
BigInt binomial(int n, int k);

/// Triangular table of the omega numbers, filled bottom-up from the
/// defining recursion:
///
///   omega(a, 0) = 1
///   omega(a, 1) = omega(a-1, 1) + 1
///   omega(a, b) = omega(a-1, b) - (b-1) * omega(a-1, b-1)   2 <= b <= a-1
///   omega(a, b) = 0                                          b >= a, b >= 1
///
/// The b = a and (1,1) entries are zero; that matches the closed form
/// (-1)^(b+1) (b-1)! C(a-1, b) and keeps the recursion total.
/// Immutable after construction; concurrent reads are safe.
class OmegaTable {
 public:
  explicit OmegaTable(int max_a);

  int max_a() const { return max_a_; }

  /// omega(a, b) for 1 <= a <= max_a(), any b >= 0.
  const BigInt& at(int a, int b) const;

 private:
  int max_a_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[a-1] holds b = 0..a-1
};

/// omega(a, b) via the defining recursion, memoized process-wide.
BigInt omega_recursive(int a, int b);

/// omega(a, b) = (-1)^(b+1) (b-1)! C(a-1, b), for b >= 1.
BigInt omega_closed(int a, int b);

/// omega(a, b) = -(b-1) * sum_{j=b}^{a-1} omega(j, b-1). The factor
/// b-1 degenerates at b = 1, so b <= 1 delegates to omega_recursive.
BigInt omega_alt_recursive(int a, int b);

/// S_i(n) = sum_{j=i+1}^{n} omega(j, i); zero when n <= i.
BigInt partial_sum(int i, int n);

/// S_i(n) = (-1)^(i+1) (i-1)! C(n, i+1), for i >= 1.
BigInt partial_sum_closed(int i, int n);

/// Table of rencontres numbers D(n, k): permutations of n items with
/// exactly k fixed points. Immutable after construction.
class RencontresTable {
 public:
  explicit RencontresTable(int max_n);

  int max_n() const { return max_n_; }

  const BigInt& at(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[n] holds k = 0..n
};

/// Derangement count D_m = m! * sum_{i=0}^{m} (-1)^i / i!, evaluated
/// in exact integer arithmetic.
BigInt subfactorial(int m);

/// D(n, k) = C(n, k) * D_{n-k}. Throws std::invalid_argument for k > n.
BigInt rencontres(int n, int k);

/// lambda_k = [k * sum_{i=0}^{k} (-1)^(i+k+1) / i!]^(-1), exact.
/// Defined for k >= 2 only; the bracketed sum vanishes for k in {0, 1}
/// (and no finite constant exists there), so those throw.
BigRat lambda_constant(int k);

/// omega(n, k) recovered as lambda_k * D(n-1, n-k-1), for 2 <= k < n.
/// Throws std::logic_error if the product is not an integer (never
/// expected; signals a bug).
BigInt omega_from_rencontres(int n, int k);

}  // namespace powertower
