// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "gapless/chain.hpp"
#include "gapless/error.hpp"
#include "gapless/gap.hpp"
#include "gapless/sweep.hpp"
#include "gapless/verify.hpp"

using namespace gapless;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double x) {
  char b[48];
  std::snprintf(b, sizeof b, "%.3g", x);
  return b;
}

std::string num(Real x) {
  char b[48];
  std::snprintf(b, sizeof b, "%.3Lg", x);
  return b;
}

void oracle_equivalence() {
  double worst = 0, slowest = 0;
  bool ok = true;
  for (double a : {pi / 6, pi / 3, 1.2})
    for (double m : {10.0, 1e3, 1e5}) {
      const WeightedSLProblem p{a, m, WeightMode::Secant2};
      for (int k = 1; k <= 2; ++k) {
        auto t0 = Clock::now();
        const double s = eigenvalue_shooting(p, k, 1e-13);
        slowest = std::max(slowest, seconds_since(t0));
        t0 = Clock::now();
        const EigenSolution e = solve_eigen_matrix(p, k, default_matrix_intervals(p));
        slowest = std::max(slowest, seconds_since(t0));
        const double r = std::abs(s - e.lambda) / std::abs(s);
        worst = std::max(worst, r);
        ok = ok && r <= 1e-8 && e.warnings.empty();
      }
    }
  ok = ok && slowest < 10;
  report(1, ok, "shooting vs pencil, worst relative difference " + num(worst) + " (<= 1e-8), slowest solve " +
                    num(slowest) + " s (< 10 s)");
}

void trivial_oracle() {
  const WeightedSLProblem p{1.0, 0.0, WeightMode::Unit};
  const double r1 = std::abs(eigenvalue_shooting(p, 1, 1e-14) / (pi * pi / 4) - 1);
  const double r2 = std::abs(eigenvalue_shooting(p, 2, 1e-14) / (pi * pi) - 1);
  report(2, r1 <= 1e-10 && r2 <= 1e-10,
         "unit weight, a = 1: relative errors " + num(r1) + ", " + num(r2) + " (<= 1e-10)");
}

}  // namespace

int main() {
  oracle_equivalence();
  trivial_oracle();

  SweepConfig cfg = SweepConfig::standard();
  cfg.workers = resolve_workers(0);
  const auto t0 = Clock::now();
  const SweepResult sweep = run_sweep(cfg);
  const double sweep_seconds = seconds_since(t0);
  const std::vector<GapReport> r = sweep.gap_reports();
  const bool complete = sweep.all_ok() && r.size() == cfg.mu_values.size();
  if (!complete)
    for (const auto& row : sweep.rows)
      if (row.status != RowStatus::Ok) std::printf("  sweep point mu = %g failed: %s\n", row.mu, row.error.c_str());
  const SweepSummary s = summarize_sweep(r);

  report(3, complete && s.bracket_lower_ok && std::isfinite(s.bracket_threshold),
         "lower bracket at every point; lambda1 <= mu cos^2(L/2) from mu2 = " + num(s.bracket_threshold));

  report(4, complete && s.ratio_decreasing && s.ratio_above_cos2 && s.excess_ratio < 0.2,
         "lambda1/mu strictly decreasing and above cos^2 L; excess ratio last/first " + num(s.excess_ratio) +
             " (< 0.2)");

  report(5, complete && s.d2gap_decreasing && s.d2gap_below_3pi2 && s.d2gap_ratio < 0.2L && sweep_seconds < 300,
         "D^2 gap strictly decreasing from " + (r.empty() ? std::string("?") : num(r.front().d2gap)) + " to " +
             (r.empty() ? std::string("?") : num(r.back().d2gap)) + ", ratio " + num(s.d2gap_ratio) +
             " (< 0.2), below 3 pi^2: " + (s.d2gap_below_3pi2 ? "yes" : "no") + ", sweep " +
             num(sweep_seconds) + " s (< 300 s)");

  report(6, complete && s.gap_est_ok && s.worst_split_rel <= 1e-6,
         "gap <= R[psi h1] - R[h1] + 1e-9 everywhere; split vs direct worst relative " + num(s.worst_split_rel) +
             " (<= 1e-6)");

  bool below_L = true;
  for (const auto& x : r) below_L = below_L && x.shape.max_location < x.L;
  report(7,
         complete && s.worst_evenness <= 1e-10 && s.positive_all && s.max_location_increasing && below_L &&
             s.h_ratio_decreasing && s.worst_inflection <= 1e-6 && s.envelope_upper_all &&
             std::isfinite(s.envelope_lower_threshold) && std::isfinite(s.h0_bound_threshold) &&
             s.integral_bound_all && s.mass_center_decreasing && s.deriv_mass_decreasing,
         "evenness " + num(s.worst_evenness) + ", inflection " + num(s.worst_inflection) +
             ", maxima move out, lower envelope from mu = " + num(s.envelope_lower_threshold) +
             ", h1(0) bound from mu = " + num(s.h0_bound_threshold) + ", integral bound everywhere: " +
             (s.integral_bound_all ? "yes" : "no") + ", inner masses decreasing: " +
             (s.mass_center_decreasing && s.deriv_mass_decreasing ? "yes" : "no"));

  bool chain_ok = true;
  std::string chain_note;
  for (int n : {3, 4}) {
    SweepConfig c = cfg;
    c.n = n;
    c.deltas.assign(static_cast<std::size_t>(n - 2), pi / 4);
    const SweepResult cr = run_sweep(c);
    const auto checks = chain_checks(n, cr.chains());
    bool level_ok = cr.all_ok();
    for (const auto& ch : checks)
      if (ch.name.find("kappa_increasing") == std::string::npos) level_ok = level_ok && ch.passed;
    chain_ok = chain_ok && level_ok;
    chain_note += "n=" + std::to_string(n) + (level_ok ? " ok" : " failed") + "; ";
  }
  double consistency = 1;
  if (!r.empty()) {
    const KappaChain two = chain_gap(2, r.front().mu, {}, r.front().L, cfg.solver);
    consistency = std::max(std::abs(two.lambda1 - r.front().lambda1) / r.front().lambda1,
                           std::abs(two.lambda2 - r.front().lambda2) / r.front().lambda2);
  }
  chain_ok = chain_ok && consistency <= 1e-8;
  report(8, chain_ok, chain_note + "n=2 reduction relative difference " + num(consistency) + " (<= 1e-8)");

  bool geo_ok = true;
  std::map<std::string, bool> geo_parts;
  for (double L : {0.1, pi / 6, pi / 4, pi / 3, 1.2, 1.5}) {
    for (const auto& ch : geometry_checks(L, cfg.mu_values, 1000, 17 + static_cast<std::uint64_t>(L * 1000))) {
      geo_ok = geo_ok && ch.passed;
      auto [it, fresh] = geo_parts.emplace(ch.name, ch.passed);
      if (!fresh) it->second = it->second && ch.passed;
    }
  }
  std::string geo_note;
  for (const auto& [name, ok] : geo_parts) geo_note += name + (ok ? " ok; " : " FAILED; ");
  report(9, geo_ok, geo_note + "slack 1e-12, 1000 random triples per L");

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
