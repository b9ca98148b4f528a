#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ptsig {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest residual observed
  double tolerance = 0.0;  // residual bound the suite enforces
  std::size_t cases = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20200101;
  std::size_t samples = 1000;
  /// Fault hook: negate C(0,1) before the "C^2=I" suite checks it.
  bool flip_c_sign = false;
};

/// Runs every invariant suite over randomized inputs drawn from `seed`.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// One "PASS|FAIL name worst=... tol=... cases=..." line per suite.
void print_report(std::ostream& os, const std::vector<SuiteResult>& results);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace ptsig
