#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hexpoly {

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

using CheckLogger = std::function<void(const CheckResult&)>;

// Oracle-backed verification suite.  The fast level skips the n=3
// enumeration sweep and the 512-grid quadrature doubling and uses n=8 for
// the finite-size cross-check; the full level runs every check at the
// documented sizes.  The logger, when given, is called after each check.
VerifyReport run_verification(bool full, const CheckLogger& log = {});

std::string format_check_line(const CheckResult& check);

}  // namespace hexpoly
