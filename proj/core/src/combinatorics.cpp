#include "powertower/combinatorics.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace powertower {

double to_double(const BigRat& r) { return r.convert_to<double>(); }

BigRat rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rational_from_double: non-finite input");
  }
  if (x == 0.0) return BigRat(0);
  int exp = 0;
  const double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  BigRat r(mant);
  if (exp > 0) {
    r *= BigRat(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= BigRat(BigInt(1) << -exp);
  }
  return r;
}

bool is_integral(const BigRat& r) { return denominator(r) == 1; }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact: C(n-k+i, i) is an integer at every step
  }
  return c;
}

OmegaTable::OmegaTable(int max_a) : max_a_(max_a) {
  if (max_a < 1) throw std::invalid_argument("OmegaTable: max_a must be >= 1");
  rows_.reserve(max_a);
  for (int a = 1; a <= max_a; ++a) {
    std::vector<BigInt> row(a);
    row[0] = 1;
    if (a >= 2) {
      const auto& prev = rows_[a - 2];
      // prev[1] is absent for a = 2; omega(1, 1) = 0 there.
      row[1] = (a >= 3 ? prev[1] : BigInt(0)) + 1;
      for (int b = 2; b <= a - 1; ++b) {
        const BigInt above = b <= a - 2 ? prev[b] : BigInt(0);  // omega(a-1, a-1) = 0
        row[b] = above - (b - 1) * prev[b - 1];
      }
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& OmegaTable::at(int a, int b) const {
  static const BigInt zero = 0;
  static const BigInt one = 1;
  if (a < 1 || a > max_a_) throw std::out_of_range("OmegaTable::at: a out of range");
  if (b < 0) throw std::out_of_range("OmegaTable::at: b out of range");
  if (b == 0) return one;
  if (b >= a) return zero;
  return rows_[a - 1][b];
}

namespace {

// Process-wide omega cache. Tables are immutable once built; growth
// swaps in a fresh larger table under the lock, so readers holding a
// snapshot are never invalidated.
std::shared_ptr<const OmegaTable> omega_snapshot(int min_max_a) {
  static std::mutex mu;
  static std::shared_ptr<const OmegaTable> table;
  std::scoped_lock lock(mu);
  if (!table || table->max_a() < min_max_a) {
    int target = table ? table->max_a() : 16;
    while (target < min_max_a) target *= 2;
    table = std::make_shared<const OmegaTable>(target);
  }
  return table;
}

}  // namespace

BigInt omega_recursive(int a, int b) {
  if (a < 1) throw std::invalid_argument("omega_recursive: a must be >= 1");
  if (b < 0) throw std::invalid_argument("omega_recursive: b must be >= 0");
  if (b == 0) return 1;
  if (b >= a) return 0;
  return omega_snapshot(a)->at(a, b);
}

BigInt omega_closed(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("omega_closed: requires a, b >= 1");
  const BigInt c = binomial(a - 1, b);
  if (c == 0) return 0;
  BigInt v = factorial(b - 1) * c;
  return b % 2 == 0 ? -v : v;  // sign (-1)^(b+1)
}

BigInt omega_alt_recursive(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("omega_alt_recursive: requires a, b >= 1");
  if (b <= 1) return omega_recursive(a, b);  // the factor b-1 degenerates
  auto table = omega_snapshot(std::max(a, 1));
  BigInt sum = 0;
  for (int j = b; j <= a - 1; ++j) sum += table->at(j, b - 1);
  return -(b - 1) * sum;
}

BigInt partial_sum(int i, int n) {
  if (i < 0) throw std::invalid_argument("partial_sum: i must be >= 0");
  if (n < 1) throw std::invalid_argument("partial_sum: n must be >= 1");
  if (n <= i) return 0;
  if (i == 0) return n;
  auto table = omega_snapshot(n);
  BigInt sum = 0;
  for (int j = i + 1; j <= n; ++j) sum += table->at(j, i);
  return sum;
}

BigInt partial_sum_closed(int i, int n) {
  if (i < 1) throw std::invalid_argument("partial_sum_closed: requires i >= 1");
  if (n < 1) throw std::invalid_argument("partial_sum_closed: n must be >= 1");
  const BigInt c = binomial(n, i + 1);
  if (c == 0) return 0;
  BigInt v = factorial(i - 1) * c;
  return i % 2 == 0 ? -v : v;  // sign (-1)^(i+1)
}

BigInt subfactorial(int m) {
  if (m < 0) throw std::invalid_argument("subfactorial: negative argument");
  // sum_{i=0}^{m} (-1)^i m!/i!, accumulated with the integer falling
  // products m!/i! (term for i = m is 1, each step multiplies by i+1).
  BigInt term = 1;
  BigInt sum = m % 2 == 0 ? 1 : -1;
  for (int i = m - 1; i >= 0; --i) {
    term *= i + 1;
    sum += i % 2 == 0 ? term : -term;
  }
  return sum;
}

RencontresTable::RencontresTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("RencontresTable: max_n must be >= 0");
  std::vector<BigInt> der(max_n + 1);
  for (int m = 0; m <= max_n; ++m) der[m] = subfactorial(m);
  rows_.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<BigInt> row(n + 1);
    for (int k = 0; k <= n; ++k) row[k] = binomial(n, k) * der[n - k];
    rows_.push_back(std::move(row));
  }
}

const BigInt& RencontresTable::at(int n, int k) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("RencontresTable::at: n out of range");
  if (k < 0 || k > n) throw std::out_of_range("RencontresTable::at: k out of range");
  return rows_[n][k];
}

BigInt rencontres(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("rencontres: negative argument");
  if (k > n) throw std::invalid_argument("rencontres: k must not exceed n");
  return binomial(n, k) * subfactorial(n - k);
}

BigRat lambda_constant(int k) {
  if (k < 2) {
    throw std::invalid_argument(
        "lambda_constant: undefined for k < 2 (the alternating sum vanishes)");
  }
  // sum_{i=0}^{k} (-1)^(i+k+1) / i!, exact.
  BigRat sum = 0;
  for (int i = 0; i <= k; ++i) {
    const BigRat term(1, factorial(i));
    sum += (i + k + 1) % 2 == 0 ? term : -term;
  }
  const BigRat denom = k * sum;
  if (denom == 0) throw std::logic_error("lambda_constant: zero denominator for k >= 2");
  return 1 / denom;
}

BigInt omega_from_rencontres(int n, int k) {
  if (k < 2 || k >= n) {
    throw std::invalid_argument("omega_from_rencontres: requires 2 <= k < n");
  }
  const BigRat v = lambda_constant(k) * BigRat(rencontres(n - 1, n - k - 1));
  if (!is_integral(v)) {
    throw std::logic_error("omega_from_rencontres: non-integral product");
  }
  return numerator(v);
}

}  // namespace powertower
