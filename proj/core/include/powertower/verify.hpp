#pragma once

#include <string>
#include <vector>

namespace powertower {

/// One verification check: an identity or reproduction test evaluated
/// at its full stated range. `detail` carries the first failure (or a
/// short summary when passing).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Suite = std::vector<CheckResult>;

/// The per-topic identity suites run by `powertower verify`. Each
/// returns one CheckResult per named check; all ranges are fixed here,
/// not caller-tunable, so a passing suite always means the same thing.
Suite verify_omega();
Suite verify_sums();
Suite verify_rencontres();
Suite verify_poly();
Suite verify_delta();
Suite verify_derivative();
Suite verify_series();

/// All suites above, in that order.
Suite verify_all();

bool all_passed(const Suite& suite);

}  // namespace powertower
