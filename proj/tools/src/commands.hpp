#pragma once

#include "render.hpp"

#include <string>
#include <vector>

namespace powertower::cli {

/// Outcome of one CLI command. Exit codes: 0 success, 1 a mathematical
/// check failed, 2 usage error. Bad input never yields 1 and a failed
/// check never yields 2.
struct CommandResult {
  int exit_code = 0;
  std::string out;  // rendered payload for the standard output stream
  std::string err;  // diagnostics for the standard error stream
};

/// Triangular table of omega(a, b), rows a = 1..max_a, columns
/// b = 0..max_a-1, zeros above the diagonal included.
CommandResult cmd_omega(int max_a, Format format);

/// Partial-sum table S_i(n) for n = 1..n_max with the direct-summation
/// and closed-form columns and their agreement flag. The closed form
/// for i = 0 is the constant column n.
CommandResult cmd_sums(int i, int n_max, Format format);

/// Rencontres triangle D(n, k) for n = 0..max_n, k = 0..max_n.
CommandResult cmd_rencontres(int max_n, Format format);

/// One polynomial of the P or Q family, as exponent/coefficient rows
/// (canonical string in text, display math in latex).
CommandResult cmd_poly(char family, int n, Format format);

/// Symbolic mode renders the full derivative form; numeric mode
/// evaluates both construction methods at x and reports their values
/// and absolute difference.
CommandResult cmd_derivative(int n, double x, bool symbolic, Format format);

/// Without eval points: the coefficient table of the order-N expansion
/// about the anchor. With eval points: partial sums at each checkpoint
/// order for each point, with the direct value and absolute error.
/// The anchor string "1" selects the exact-rational path.
CommandResult cmd_series(const std::string& anchor, int order,
                         const std::vector<double>& eval_at,
                         std::vector<int> checkpoints, Format format);

/// Runs one identity suite (or all of them); one PASS/FAIL line per
/// check, exit 1 if anything failed.
CommandResult cmd_verify(const std::string& suite, Format format);

}  // namespace powertower::cli
