#include "powertower/derivative.hpp"

#include "powertower/combinatorics.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace powertower {

const char* method_name(DerivativeMethod m) {
  switch (m) {
    case DerivativeMethod::recursive: return "recursive";
    case DerivativeMethod::closed: return "closed";
  }
  throw std::invalid_argument("method_name: unknown method");
}

std::string DerivativeForm::to_string() const {
  std::ostringstream os;
  os << "f(x)*(";
  bool first = true;
  for (int j = order; j >= 0; --j) {
    const LaurentPoly& c = ln_coeffs[j];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    const bool unit = cs == "1";
    const bool atom = c.terms().size() == 1 && !(cs.size() && cs[0] == '-');
    if (j == 0) {
      os << cs;
      continue;
    }
    if (!unit) {
      if (atom) {
        os << cs << "*";
      } else {
        os << "(" << cs << ")*";
      }
    }
    os << "ln(x)";
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

namespace {

// G_n = ln(x) G_{n-1} + sum_{i=0}^{n-1} omega(n, i) x^(-i) G_{n-1-i},
// carried in the vector-of-ln-coefficients representation. Reads
// G_0..G_{n-1} from the cache rows already built.
std::vector<LaurentPoly> g_step(const std::vector<std::vector<LaurentPoly>>& cache, int n) {
  std::vector<LaurentPoly> g(n + 1);
  const std::vector<LaurentPoly>& prev = cache[n - 1];
  for (int j = 0; j < n; ++j) g[j + 1] = prev[j];  // the ln(x) shift
  for (int i = 0; i <= n - 1; ++i) {
    const BigInt w = omega_recursive(n, i);
    if (w == 0) continue;
    const std::vector<LaurentPoly>& tail = cache[n - 1 - i];
    for (int j = 0; j < static_cast<int>(tail.size()); ++j) {
      g[j] += tail[j].scaled(BigRat(w)).shifted(-i);
    }
  }
  return g;
}

std::vector<LaurentPoly> g_form(int n) {
  static std::mutex mu;
  static std::vector<std::vector<LaurentPoly>> cache;
  std::scoped_lock lock(mu);
  if (cache.empty()) cache.push_back({LaurentPoly::constant(BigRat(1))});
  while (static_cast<int>(cache.size()) <= n) {
    cache.push_back(g_step(cache, static_cast<int>(cache.size())));
  }
  return cache[n];
}

}  // namespace

DerivativeForm derivative_form_recursive(int n) {
  if (n < 0) throw std::invalid_argument("derivative_form_recursive: n must be >= 0");
  DerivativeForm form;
  form.order = n;
  form.ln_coeffs = g_form(n);
  return form;
}

DerivativeForm derivative_form_closed(int n) {
  if (n < 0) throw std::invalid_argument("derivative_form_closed: n must be >= 0");
  DerivativeForm form;
  form.order = n;
  form.ln_coeffs.resize(n + 1);
  for (int i = 0; i <= n; ++i) form.ln_coeffs[n - i] = delta_closed(n, i);
  return form;
}

namespace {

// Error-free transformations for the compensated ln-power sum.
struct TwoSum {
  double s, e;
};

TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bp = s - a;
  const double e = (a - (s - bp)) + (b - bp);
  return {s, e};
}

TwoSum two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace

DerivativeValue derivative_eval(int n, double x, DerivativeMethod method) {
  if (n < 0) throw std::invalid_argument("derivative_eval: n must be >= 0");
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::invalid_argument("derivative_eval: requires finite x > 0");
  }
  const DerivativeForm form = method == DerivativeMethod::recursive
                                  ? derivative_form_recursive(n)
                                  : derivative_form_closed(n);
  const double L = std::log(x);
  // Compensated Horner in L over the evaluated coefficients: running
  // value plus a separate accumulator for the rounding residue of each
  // product and sum.
  double val = 0.0;
  double comp = 0.0;
  for (int j = n; j >= 0; --j) {
    const TwoSum p = two_prod(val, L);
    const TwoSum s = two_sum(p.s, form.ln_coeffs[j].eval_double(x));
    comp = comp * L + (p.e + s.e);
    val = s.s;
  }
  val += comp;

  DerivativeValue out;
  out.order = n;
  out.x = x;
  out.method = method;
  out.value = std::exp(x * L) * val;
  if (x < 0.1 && n >= 8) {
    out.warning =
        "low-x high-order evaluation: the 1/x^i coefficient terms grow large "
        "and the alternating ln-power sum loses precision";
  }
  return out;
}

BigInt derivative_at_one(int n) {
  if (n < 0) throw std::invalid_argument("derivative_at_one: n must be >= 0");
  const BigRat v = poly_q(n).eval(BigRat(1));
  return numerator(v);
}

}  // namespace powertower
