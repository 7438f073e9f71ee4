// Acceptance gate: runs the oracle-backed verification suite at the full
// level and prints one pass/fail line per criterion.
#include <cstdio>
#include <cstring>

#include "hexpoly/verify.hpp"

int main(int argc, char** argv) {
  bool full = true;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--fast") == 0) full = false;

  hexpoly::VerifyReport report = hexpoly::run_verification(
      full, [](const hexpoly::CheckResult& check) {
        std::printf("%s\n", hexpoly::format_check_line(check).c_str());
        std::fflush(stdout);
      });

  int failed = 0;
  for (const auto& check : report.checks)
    if (!check.passed) ++failed;
  if (failed > 0) {
    std::printf("%d of %zu checks failed\n", failed, report.checks.size());
    return 1;
  }
  std::printf("all %zu checks passed\n", report.checks.size());
  return 0;
}
