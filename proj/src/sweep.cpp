#include <algorithm>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "gapless/error.hpp"
#include "gapless/sweep.hpp"

namespace gapless {

std::vector<double> SweepConfig::log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0) || !(hi >= lo) || count == 0) throw ConfigError("log_spaced: need 0 < lo <= hi, count >= 1");
  if (count == 1) return {lo};
  const double a = std::log10(lo), b = std::log10(hi);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

SweepConfig SweepConfig::standard() {
  SweepConfig c;
  c.mu_values = log_spaced(1e2, 1e6, 9);
  return c;
}

void SweepConfig::validate() const {
  if (n < 2) throw ConfigError("sweep: n must be >= 2");
  if (deltas.size() != static_cast<std::size_t>(n - 2))
    throw ConfigError("sweep: n = " + std::to_string(n) + " needs " + std::to_string(n - 2) +
                      " deltas, got " + std::to_string(deltas.size()));
  StripDomain d{n, 1.0, L, deltas};
  d.validate();
  if (mu_values.empty()) throw ConfigError("sweep: no mu values");
  for (std::size_t i = 0; i < mu_values.size(); ++i) {
    if (!(mu_values[i] > 0)) throw ConfigError("sweep: mu values must be positive");
    if (i > 0 && !(mu_values[i] > mu_values[i - 1]))
      throw ConfigError("sweep: mu values must be strictly increasing");
  }
  const double p0 = effective_phi0();
  if (n == 2 && !(p0 > 0 && p0 < L / 2)) throw ConfigError("sweep: phi0 must lie in (0, L/2)");
  if (!(mu_cap > 0)) throw ConfigError("sweep: mu_cap must be positive");
  solver.validate();
}

bool SweepResult::all_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status == RowStatus::Ok; });
}

std::vector<GapReport> SweepResult::gap_reports() const {
  std::vector<GapReport> out;
  for (const auto& r : rows)
    if (r.gap) out.push_back(*r.gap);
  return out;
}

std::vector<KappaChain> SweepResult::chains() const {
  std::vector<KappaChain> out;
  for (const auto& r : rows)
    if (r.chain) out.push_back(*r.chain);
  return out;
}

int resolve_workers(int configured) {
  if (const char* env = std::getenv("GAPLESS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return configured;
}

namespace {

double effective_cap(const SweepConfig& c) { return std::min(c.mu_cap, kPrecisionCap); }

void prepare(const SweepConfig& c, SweepResult& out) {
  c.validate();
  if (c.mu_cap > kPrecisionCap)
    out.warnings.push_back("precision: mu cap " + std::to_string(c.mu_cap) +
                           " exceeds the double-precision budget 1e6; points above 1e6 are skipped");
  out.rows.resize(c.mu_values.size());
  for (std::size_t i = 0; i < c.mu_values.size(); ++i) {
    out.rows[i].mu = c.mu_values[i];
    if (c.mu_values[i] > effective_cap(c)) {
      out.rows[i].status = RowStatus::Skipped;
      out.rows[i].error = "skipped: above precision cap";
    }
  }
}

void run_point(const SweepConfig& c, SweepRow& row) {
  if (row.status == RowStatus::Skipped) return;
  try {
    if (c.n == 2) {
      row.gap = analyze_gap(StripDomain{2, row.mu, c.L, {}}, c.effective_phi0(), c.solver);
    } else {
      row.chain = chain_gap(c.n, row.mu, c.deltas, c.L, c.solver);
    }
  } catch (const std::exception& e) {
    row.status = RowStatus::Failed;
    row.error = e.what();
  }
}

}  // namespace

SweepResult run_sweep_serial(const SweepConfig& config) {
  SweepResult out;
  prepare(config, out);
  for (auto& row : out.rows) run_point(config, row);
  return out;
}

SweepResult run_sweep_parallel(const SweepConfig& config) {
  SweepResult out;
  prepare(config, out);
  const int workers = config.workers > 0 ? config.workers : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(out.rows.size());
  // Cost grows with mu, so hand out the expensive points first.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t j = 0; j < count; ++j) run_point(config, out.rows[static_cast<std::size_t>(count - 1 - j)]);
  return out;
}

SweepResult run_sweep(const SweepConfig& config) {
  return config.workers == 1 ? run_sweep_serial(config) : run_sweep_parallel(config);
}

}  // namespace gapless
