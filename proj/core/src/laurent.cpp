#include "powertower/laurent.hpp"

#include "powertower/combinatorics.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powertower {

LaurentPoly LaurentPoly::constant(BigRat c) {
  LaurentPoly p;
  p.set(0, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::term(int exponent, BigRat coeff) {
  LaurentPoly p;
  p.set(exponent, std::move(coeff));
  return p;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::lowest_exponent() const {
  if (terms_.empty()) throw std::logic_error("lowest_exponent of the zero polynomial");
  return terms_.begin()->first;
}

BigRat LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRat(0) : it->second;
}

void LaurentPoly::set(int exponent, BigRat coeff) {
  if (coeff == 0) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = std::move(coeff);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly LaurentPoly::scaled(const BigRat& factor) const {
  LaurentPoly p;
  if (factor == 0) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * factor);
  return p;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + s, c);
  return p;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) {
    if (e != 0) p.terms_.emplace(e - 1, c * e);
  }
  return p;
}

BigRat LaurentPoly::eval(const BigRat& x) const {
  if (terms_.empty()) return 0;
  if (x == 0 && lowest_exponent() < 0) {
    throw std::invalid_argument("LaurentPoly::eval: pole at x = 0");
  }
  // Horner over descending exponents; gaps cost one extra power each.
  BigRat acc = 0;
  int prev_e = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      acc = c;
      first = false;
    } else {
      BigRat pw = x;
      for (int i = 1; i < prev_e - e; ++i) pw *= x;
      acc = acc * pw + c;
    }
    prev_e = e;
  }
  if (prev_e > 0) {
    for (int i = 0; i < prev_e; ++i) acc *= x;
  } else if (prev_e < 0) {
    for (int i = 0; i < -prev_e; ++i) acc /= x;
  }
  return acc;
}

double LaurentPoly::eval_double(double x) const {
  double acc = 0.0;
  int prev_e = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const double cd = to_double(c);
    if (first) {
      acc = cd;
      first = false;
    } else {
      acc = acc * std::pow(x, prev_e - e) + cd;
    }
    prev_e = e;
  }
  return first ? 0.0 : acc * std::pow(x, prev_e);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigRat mag = neg ? BigRat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << powertower::to_string(mag);
    } else if (e > 0) {
      if (mag != 1) {
        if (is_integral(mag)) os << powertower::to_string(mag);
        else os << "(" << powertower::to_string(mag) << ")";
      }
      os << "x";
      if (e > 1) os << "^" << e;
    } else {
      // Negative exponents render over the variable: "1/x", "3/x^2".
      if (is_integral(mag)) {
        os << powertower::to_string(mag);
      } else {
        os << "(" << powertower::to_string(mag) << ")";
      }
      os << "/x";
      if (e < -1) os << "^" << -e;
    }
  }
  return os.str();
}

LaurentPoly poly_p(int n) {
  if (n < 1) throw std::invalid_argument("poly_p: n must be >= 1");
  LaurentPoly p;
  for (int i = 0; i <= n - 1; ++i) {
    const BigInt w = omega_recursive(n, i);
    if (w != 0) p += LaurentPoly::term(n - 1 - i, BigRat(w));
  }
  return p;
}

LaurentPoly poly_p_kth_derivative(int n, int k) {
  if (n < 1) throw std::invalid_argument("poly_p_kth_derivative: n must be >= 1");
  if (k < 0) throw std::invalid_argument("poly_p_kth_derivative: k must be >= 0");
  if (k == 0) return poly_p(n);
  if (k > n - 1) return LaurentPoly();  // degree n-1 is wiped out
  const BigInt w = omega_recursive(n, k);
  BigRat factor = BigRat(k) * BigRat(w);
  if (k % 2 == 0) factor = -factor;  // sign (-1)^(k+1)
  return poly_p(n - k).scaled(factor);
}

namespace {

// Process-wide caches for the polynomial families. Entries are
// immutable; readers copy under the lock (the maps are cheap to copy
// at the sizes these recursions reach).
std::mutex poly_mu;

const LaurentPoly& poly_q_locked(int k, std::vector<LaurentPoly>& cache) {
  while (static_cast<int>(cache.size()) <= k) {
    const int m = static_cast<int>(cache.size());
    if (m == 0) {
      cache.push_back(LaurentPoly::term(-1, BigRat(1)));
      continue;
    }
    LaurentPoly sum;
    for (int i = 0; i <= m - 1; ++i) {
      const BigInt w = omega_recursive(m, i);
      if (w != 0) sum += cache[m - 1 - i].scaled(BigRat(w));
    }
    cache.push_back(sum.shifted(1));
  }
  return cache[k];
}

}  // namespace

LaurentPoly poly_q(int k) {
  if (k < 0) throw std::invalid_argument("poly_q: k must be >= 0");
  static std::vector<LaurentPoly> cache;
  std::scoped_lock lock(poly_mu);
  return poly_q_locked(k, cache);
}

namespace {

const LaurentPoly& delta_locked(
    int n, int k, std::map<std::pair<int, int>, LaurentPoly>& cache) {
  static const LaurentPoly one = LaurentPoly::constant(BigRat(1));
  static const LaurentPoly zero;
  if (k == 0) return one;
  if (k > n) return zero;
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  LaurentPoly v = delta_locked(n - 1, k, cache);
  for (int i = 0; i <= k - 1; ++i) {
    const BigInt w = omega_recursive(n, i);
    if (w == 0) continue;
    const LaurentPoly& tail = delta_locked(n - 1 - i, k - 1 - i, cache);
    v += tail.scaled(BigRat(w)).shifted(-i);
  }
  return cache.emplace(std::pair{n, k}, std::move(v)).first->second;
}

}  // namespace

LaurentPoly delta_recursive(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("delta_recursive: negative argument");
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  std::scoped_lock lock(poly_mu);
  return delta_locked(n, k, cache);
}

LaurentPoly delta_closed(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("delta_closed: negative argument");
  if (k > n) return LaurentPoly();
  const BigInt c = binomial(n, k);
  return poly_q(k).scaled(BigRat(c)).shifted(-(k - 1));
}

bool omega_binomial_identity_holds(int n, int k, int i) {
  if (!(0 <= i && i <= k && k < n)) {
    throw std::invalid_argument("omega_binomial_identity_holds: requires 0 <= i <= k < n");
  }
  return omega_recursive(n, i) * binomial(n - 1 - i, k - i) ==
         omega_recursive(k + 1, i) * binomial(n - 1, k);
}

}  // namespace powertower
