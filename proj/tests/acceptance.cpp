// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exact rationals unless --prime p is given; exits nonzero when any
// criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "bei/verification.hpp"

int main(int argc, char** argv) {
  bei::VerifyOptions opts;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--jobs" && k + 1 < argc) opts.jobs = std::atoi(argv[++k]);
    else if (arg == "--prime" && k + 1 < argc) opts.prime = static_cast<std::uint32_t>(std::atol(argv[++k]));
  }
  int failed = 0;
  for (int id = 1; id <= bei::kCriterionCount; ++id) {
    const bei::CriterionResult r = bei::run_criterion(id, opts);
    std::printf("%s\n", bei::format_result(r).c_str());
    std::fflush(stdout);
    failed += !r.passed();
  }
  std::printf("%d of %d criteria passed\n", bei::kCriterionCount - failed, bei::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
