// Full verification battery at its contract bounds. Prints one line per
// criterion; conjecture-probe failures are reported but do not fail the run.
#include <cstdio>

#include "suite.hpp"

int main() {
  const auto results = narayana::run_acceptance_suite(narayana::SuiteBounds{});
  int required_failures = 0;
  for (const auto& r : results) {
    const char* verdict = r.passed ? "PASS" : (r.conjecture_probe ? "FAIL (conjecture-probe, non-fatal)" : "FAIL");
    std::printf("criterion %d: %s - %s [%s]\n", r.id, verdict, r.name.c_str(),
                r.detail.c_str());
    if (!r.passed && !r.conjecture_probe) ++required_failures;
  }
  if (required_failures > 0) {
    std::printf("acceptance: %d required criterion failure(s)\n", required_failures);
    return 1;
  }
  std::printf("acceptance: all required criteria passed\n");
  return 0;
}
