#pragma once

// Parameter sweeps over mu. Points are independent; the OpenMP variant
// distributes them over workers and the serial one is the reference. Rows
// always come back in mu order.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gapless/chain.hpp"
#include "gapless/gap.hpp"

namespace gapless {

// Largest mu the double-precision eigenvalue bisection is trusted at.
inline constexpr double kPrecisionCap = 1e6;

struct SweepConfig {
  int n = 2;
  double L = pi / 3;
  std::vector<double> deltas;
  std::vector<double> mu_values;
  double phi0 = std::nan("");  // NaN selects L/4
  double mu_cap = kPrecisionCap;
  SolverConfig solver;
  int workers = 0;  // 0: OpenMP default

  static std::vector<double> log_spaced(double lo, double hi, std::size_t count);
  static SweepConfig standard();  // L = pi/3, mu = 10^2 .. 10^6, 9 points

  double effective_phi0() const { return std::isnan(phi0) ? default_phi0(L) : phi0; }
  // Throws ConfigError on any invariant violation.
  void validate() const;
};

enum class RowStatus { Ok, Skipped, Failed };

struct SweepRow {
  double mu = 0.0;
  RowStatus status = RowStatus::Ok;
  std::optional<GapReport> gap;      // n = 2
  std::optional<KappaChain> chain;   // n >= 3
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;

  bool all_ok() const;
  std::vector<GapReport> gap_reports() const;
  std::vector<KappaChain> chains() const;
};

// GAPLESS_WORKERS, when set to a positive integer, overrides `configured`.
int resolve_workers(int configured);

SweepResult run_sweep_serial(const SweepConfig& config);
SweepResult run_sweep_parallel(const SweepConfig& config);
SweepResult run_sweep(const SweepConfig& config);

}  // namespace gapless
