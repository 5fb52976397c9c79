#include "commands.hpp"

#include "powertower/combinatorics.hpp"
#include "powertower/derivative.hpp"
#include "powertower/laurent.hpp"
#include "powertower/series.hpp"
#include "powertower/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace powertower::cli {

namespace {

CommandResult usage_error(std::string message) {
  CommandResult r;
  r.exit_code = 2;
  r.err = "error: " + std::move(message) + "\n";
  return r;
}

CommandResult ok(const Table& table, Format format) {
  CommandResult r;
  r.out = render(table, format);
  return r;
}

std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigRat mag = neg ? BigRat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mag_s = is_integral(mag)
                            ? to_string(mag)
                            : "\\frac{" + to_string(numerator(mag)) + "}{" +
                                  to_string(denominator(mag)) + "}";
    if (e == 0) {
      os << mag_s;
    } else if (e > 0) {
      if (mag != 1) os << mag_s;
      os << "x";
      if (e > 1) os << "^{" << e << "}";
    } else {
      os << "\\frac{" << mag_s << "}{x";
      if (e < -1) os << "^{" << -e << "}";
      os << "}";
    }
  }
  return os.str();
}

std::string latex_derivative_form(const DerivativeForm& form) {
  std::ostringstream os;
  os << "f^{(" << form.order << ")}(x) = f(x)\\left(";
  bool first = true;
  for (int j = form.order; j >= 0; --j) {
    const LaurentPoly& c = form.ln_coeffs[j];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << latex_poly(c);
      continue;
    }
    const std::string cs = latex_poly(c);
    if (cs != "1") {
      if (c.terms().size() == 1 && cs[0] != '-') os << cs << "\\,";
      else os << "\\left(" << cs << "\\right)";
    }
    os << "\\ln";
    if (j > 1) os << "^{" << j << "}";
    os << "(x)";
  }
  if (first) os << "0";
  os << "\\right)";
  return os.str();
}

}  // namespace

CommandResult cmd_omega(int max_a, Format format) {
  if (max_a < 1) return usage_error("omega: max-a must be >= 1");
  Table t;
  t.command = "omega";
  t.params = {{"max_a", max_a}};
  t.columns.push_back("a");
  for (int b = 0; b < max_a; ++b) t.columns.push_back("b=" + std::to_string(b));
  const OmegaTable table(max_a);
  for (int a = 1; a <= max_a; ++a) {
    std::vector<Cell> row;
    row.reserve(max_a + 1);
    row.push_back(Cell::of_integer(a));
    for (int b = 0; b < max_a; ++b) row.push_back(Cell::of_exact(to_string(table.at(a, b))));
    t.rows.push_back(std::move(row));
  }
  return ok(t, format);
}

CommandResult cmd_sums(int i, int n_max, Format format) {
  if (i < 0) return usage_error("sums: i must be >= 0");
  if (n_max < 1) return usage_error("sums: n-max must be >= 1");
  Table t;
  t.command = "sums";
  t.params = {{"i", i}, {"n_max", n_max}};
  t.columns = {"n", "direct", "closed", "agree"};
  for (int n = 1; n <= n_max; ++n) {
    const BigInt direct = partial_sum(i, n);
    const BigInt closed = i == 0           ? BigInt(n)
                          : n <= i         ? BigInt(0)
                                           : partial_sum_closed(i, n);
    t.rows.push_back({Cell::of_integer(n), Cell::of_exact(to_string(direct)),
                      Cell::of_exact(to_string(closed)),
                      Cell::of_boolean(direct == closed)});
  }
  return ok(t, format);
}

CommandResult cmd_rencontres(int max_n, Format format) {
  if (max_n < 0) return usage_error("rencontres: max-n must be >= 0");
  Table t;
  t.command = "rencontres";
  t.params = {{"max_n", max_n}};
  t.columns.push_back("n");
  for (int k = 0; k <= max_n; ++k) t.columns.push_back("k=" + std::to_string(k));
  const RencontresTable table(max_n);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Cell> row;
    row.reserve(max_n + 2);
    row.push_back(Cell::of_integer(n));
    for (int k = 0; k <= max_n; ++k) {
      row.push_back(Cell::of_exact(k <= n ? to_string(table.at(n, k)) : "0"));
    }
    t.rows.push_back(std::move(row));
  }
  return ok(t, format);
}

CommandResult cmd_poly(char family, int n, Format format) {
  if (family != 'P' && family != 'Q') return usage_error("poly: family must be P or Q");
  if (n < 0) return usage_error("poly: n must be >= 0");
  if (family == 'P' && n == 0) return usage_error("poly: the P family starts at n = 1");
  const LaurentPoly p = family == 'P' ? poly_p(n) : poly_q(n);
  if (format == Format::text || format == Format::latex) {
    CommandResult r;
    std::ostringstream os;
    if (format == Format::text) {
      os << family << "_" << n << "(x) = " << p.to_string() << "\n";
    } else {
      os << "$" << family << "_{" << n << "}(x) = " << latex_poly(p) << "$\n";
    }
    r.out = os.str();
    return r;
  }
  Table t;
  t.command = "poly";
  t.params = {{"family", std::string(1, family)}, {"n", n}};
  t.columns = {"exponent", "coefficient"};
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    t.rows.push_back({Cell::of_integer(it->first), Cell::of_exact(to_string(it->second))});
  }
  if (p.is_zero()) t.rows.push_back({Cell::of_integer(0), Cell::of_exact("0")});
  return ok(t, format);
}

CommandResult cmd_derivative(int n, double x, bool symbolic, Format format) {
  if (n < 0) return usage_error("derivative: n must be >= 0");
  if (symbolic) {
    const DerivativeForm form = derivative_form_closed(n);
    if (format == Format::text || format == Format::latex) {
      CommandResult r;
      if (format == Format::text) {
        r.out = "f^(" + std::to_string(n) + ")(x) = " + form.to_string() + "\n";
      } else {
        r.out = "$" + latex_derivative_form(form) + "$\n";
      }
      return r;
    }
    Table t;
    t.command = "derivative";
    t.params = {{"n", n}, {"symbolic", true}};
    t.columns = {"ln_power", "coefficient"};
    for (int j = n; j >= 0; --j) {
      t.rows.push_back(
          {Cell::of_integer(j), Cell::of_text(form.ln_coeffs[j].to_string())});
    }
    return ok(t, format);
  }
  if (!std::isfinite(x) || x <= 0.0) {
    return usage_error("derivative: numeric mode needs --x > 0 (or pass --symbolic)");
  }
  const DerivativeValue rec = derivative_eval(n, x, DerivativeMethod::recursive);
  const DerivativeValue clo = derivative_eval(n, x, DerivativeMethod::closed);
  Table t;
  t.command = "derivative";
  t.params = {{"n", n}, {"x", x}, {"symbolic", false}};
  t.columns = {"n", "x", "recursive", "closed", "difference"};
  t.rows.push_back({Cell::of_integer(n), Cell::of_number(x), Cell::of_number(rec.value),
                    Cell::of_number(clo.value),
                    Cell::of_number(std::fabs(rec.value - clo.value))});
  CommandResult r = ok(t, format);
  if (!clo.warning.empty()) r.err = "warning: " + clo.warning + "\n";
  return r;
}

CommandResult cmd_series(const std::string& anchor, int order,
                         const std::vector<double>& eval_at,
                         std::vector<int> checkpoints, Format format) {
  if (order < 0) return usage_error("series: order must be >= 0");
  double anchor_value = 1.0;
  bool anchor_one = true;
  if (anchor != "1") {
    try {
      std::size_t pos = 0;
      anchor_value = std::stod(anchor, &pos);
      if (pos != anchor.size()) throw std::invalid_argument(anchor);
    } catch (const std::exception&) {
      return usage_error("series: anchor must be a positive number");
    }
    if (!std::isfinite(anchor_value) || anchor_value <= 0.0) {
      return usage_error("series: anchor must be > 0");
    }
    anchor_one = anchor_value == 1.0;
  }
  for (int n : checkpoints) {
    if (n < 0 || n > order) {
      return usage_error("series: checkpoints must lie in 0..order");
    }
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  const TaylorSeries series =
      anchor_one ? taylor_at_one(order) : taylor_at(anchor_value, order);

  if (eval_at.empty()) {
    Table t;
    t.command = "series";
    t.params = {{"anchor", anchor}, {"order", order}};
    t.columns = {"k", "coefficient"};
    for (int k = 0; k <= order; ++k) {
      t.rows.push_back({Cell::of_integer(k),
                        series.anchor_is_one
                            ? Cell::of_exact(to_string(series.exact_coeffs[k]))
                            : Cell::of_number(series.coeffs[k])});
    }
    return ok(t, format);
  }

  if (checkpoints.empty()) checkpoints.push_back(order);
  Table t;
  t.command = "series";
  t.params = {{"anchor", anchor}, {"order", order}};
  t.columns = {"x", "n", "value", "direct", "abs_error"};
  for (double x : eval_at) {
    if (!std::isfinite(x)) return usage_error("series: eval points must be finite");
    const EvalReport report = convergence_report(series, x, checkpoints);
    for (const EvalRow& row : report.rows) {
      t.rows.push_back({Cell::of_number(x), Cell::of_integer(row.n),
                        Cell::of_number(row.value),
                        report.has_direct ? Cell::of_number(report.direct_value)
                                          : Cell::of_text(""),
                        report.has_direct ? Cell::of_number(row.abs_error)
                                          : Cell::of_text("")});
    }
  }
  return ok(t, format);
}

CommandResult cmd_verify(const std::string& suite, Format format) {
  struct Entry {
    const char* name;
    Suite (*run)();
  };
  static const Entry kSuites[] = {
      {"omega", verify_omega},     {"sums", verify_sums},
      {"rencontres", verify_rencontres}, {"poly", verify_poly},
      {"delta", verify_delta},     {"derivative", verify_derivative},
      {"series", verify_series},
  };
  std::vector<std::pair<std::string, Suite>> results;
  bool found = suite == "all";
  for (const Entry& entry : kSuites) {
    if (suite == "all" || suite == entry.name) {
      // An escaped exception is a failed verification (exit 1), never a
      // usage problem, so fold it into the suite as a failing check.
      try {
        results.emplace_back(entry.name, entry.run());
      } catch (const std::exception& e) {
        results.emplace_back(entry.name,
                             Suite{{std::string(entry.name) + "-suite-exception", false,
                                    std::string("threw: ") + e.what()}});
      }
      found = found || suite == entry.name;
    }
  }
  if (!found) {
    return usage_error(
        "verify: unknown suite (use all, omega, sums, rencontres, poly, delta, "
        "derivative, or series)");
  }
  int failed = 0;
  int total = 0;
  Table t;
  t.command = "verify";
  t.params = {{"suite", suite}};
  t.columns = {"suite", "check", "status", "detail"};
  for (const auto& [name, checks] : results) {
    for (const CheckResult& check : checks) {
      ++total;
      failed += check.pass ? 0 : 1;
      t.rows.push_back({Cell::of_text(name), Cell::of_text(check.name),
                        Cell::of_text(check.pass ? "PASS" : "FAIL"),
                        Cell::of_text(check.detail)});
    }
  }
  CommandResult r;
  if (format == Format::text) {
    std::ostringstream os;
    for (const auto& row : t.rows) {
      os << row[2].s << "  " << row[0].s << "/" << row[1].s << "  (" << row[3].s << ")\n";
    }
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
       << " [" << total - failed << "/" << total << "]\n";
    r.out = os.str();
  } else {
    r.out = render(t, format);
  }
  r.exit_code = failed == 0 ? 0 : 1;
  return r;
}

}  // namespace powertower::cli
