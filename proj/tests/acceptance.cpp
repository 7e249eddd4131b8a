// One PASS/FAIL line per acceptance criterion over the default sweep.

#include <iostream>

#include "motiondual/verify.hpp"

int main() {
  motiondual::VerifyOptions options;
  options.jobs = 2;
  const auto summary = motiondual::run_verify(options);
  for (const auto& c : summary.criteria) {
    std::cout << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.detail << "\n";
  }
  std::cout << (summary.passed() ? "all criteria passed" : "some criteria failed") << " in " << summary.seconds
            << " s\n";
  return summary.passed() ? 0 : 1;
}
