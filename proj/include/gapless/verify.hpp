#pragma once

// Named inequality checks over a sweep: geometry bounds, eigenvalue
// brackets, the test-function bound, shape diagnostics and the chain bound.

#include <cstdint>
#include <string>
#include <vector>

#include "gapless/sweep.hpp"

namespace gapless {

struct Check {
  std::string name;
  bool passed = false;
  Real margin = 0;  // positive when satisfied, where a margin makes sense
  std::string detail;
};

struct VerifyConfig {
  SweepConfig sweep = SweepConfig::standard();
  std::vector<int> chain_dims{3, 4};
  double chain_delta = pi / 4;
  int triangle_samples = 1000;
  std::uint64_t seed = 20240229;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::vector<double> skipped_mu;
  SweepSummary summary;

  bool all_passed() const;
};

VerifyReport run_verify(const VerifyConfig& config);

// Individual suites, usable on their own.
std::vector<Check> geometry_checks(double L, const std::vector<double>& mus, int triangle_samples,
                                   std::uint64_t seed);
std::vector<Check> gap_checks(const std::vector<GapReport>& reports, const SweepSummary& s);
std::vector<Check> chain_checks(int n, const std::vector<KappaChain>& chains);

}  // namespace gapless
