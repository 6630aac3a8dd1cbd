#include <algorithm>
#include <cmath>
#include <string>

#include "gapless/error.hpp"
#include "gapless/slcore.hpp"
#include "prufer.hpp"

namespace gapless {

void WeightedSLProblem::validate() const {
  if (!(half_width > 0.0)) throw ConfigError("WeightedSLProblem: half-width must be > 0");
  if (weight == WeightMode::Secant2 && half_width > pi / 2 - kSecantMargin)
    throw ConfigError("WeightedSLProblem: half-width must be <= pi/2 - 1e-3 for sec^2 weight");
  if (!std::isfinite(shift)) throw ConfigError("WeightedSLProblem: shift must be finite");
}

double weight_value(WeightMode mode, double phi) {
  if (mode == WeightMode::Unit) return 1.0;
  const double c = std::cos(phi);
  return 1.0 / (c * c);
}

double WeightedSLProblem::w(double phi) const { return weight_value(weight, phi); }

void SolverConfig::validate() const {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-6))
    throw ConfigError("SolverConfig: rel_tol must lie in [1e-14, 1e-6]");
  if (!(ode_tol > 0.0 && ode_tol < 1e-6)) throw ConfigError("SolverConfig: ode_tol must lie in (0, 1e-6)");
  if (!(min_steps_per_sqrt_m >= 1.0)) throw ConfigError("SolverConfig: min_steps_per_sqrt_m must be >= 1");
  if (grid_min < 64) throw ConfigError("SolverConfig: grid_min must be >= 64");
  if (inner_points < 64) throw ConfigError("SolverConfig: inner_points must be >= 64");
  if (max_index < 1) throw ConfigError("SolverConfig: max_index must be >= 1");
  if (!(shift_cap > 0.0)) throw ConfigError("SolverConfig: shift_cap must be > 0");
}

std::size_t SolverConfig::grid_intervals(double shift) const {
  const double wanted =
      std::max(static_cast<double>(grid_min), std::ceil(grid_per_sqrt_m * std::sqrt(std::abs(shift))));
  // Multiple of 4 so each half of the symmetric grid is itself Simpson-ready.
  auto n = static_cast<std::size_t>(wanted);
  return (n + 3) / 4 * 4;
}

std::pair<double, double> bracket_lambda(const WeightedSLProblem& p, int k) {
  p.validate();
  if (k < 1) throw ConfigError("bracket_lambda: index must be >= 1");
  const double base = std::pow(k * pi / (2.0 * p.half_width), 2) + p.shift;
  if (p.weight == WeightMode::Unit) return {base, base};
  // 1 <= w <= sec^2 a, so the weighted eigenvalue lies between base and
  // base cos^2 a (order depending on the sign of base).
  const double c2 = std::pow(std::cos(p.half_width), 2);
  return base >= 0.0 ? std::pair{base * c2, base} : std::pair{base, base * c2};
}

std::pair<double, double> bracket_lambda1(const WeightedSLProblem& p) {
  p.validate();
  if (p.weight == WeightMode::Unit || p.shift <= 0.0) return bracket_lambda(p, 1);
  const double a = p.half_width;
  const double c2 = std::pow(std::cos(a), 2);
  const double string_mode = pi * pi / (4.0 * a * a);
  return {c2 * (string_mode + p.shift), p.shift + string_mode};
}

namespace {

void check_request(const WeightedSLProblem& p, int k, double rel_tol, const SolverConfig& config) {
  p.validate();
  config.validate();
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-6))
    throw ConfigError("shooting: rel_tol must lie in [1e-14, 1e-6]");
  if (k < 1 || k > config.max_index)
    throw ConfigError("shooting: index " + std::to_string(k) + " outside [1, " +
                      std::to_string(config.max_index) + "]");
  if (std::abs(p.shift) > config.shift_cap)
    throw ConfigError("shooting: |m| = " + std::to_string(p.shift) +
                      " exceeds the double-precision cap " + std::to_string(config.shift_cap));
}

}  // namespace

double eigenvalue_shooting(const WeightedSLProblem& p, int k, double rel_tol,
                           const SolverConfig& config) {
  check_request(p, k, rel_tol, config);
  const Parity parity = parity_of_index(k);
  const double target = detail::phase_target(k);
  auto phase = [&](double lambda) {
    return detail::PruferIntegrator(p, lambda, config).shoot(parity, p.half_width).theta;
  };

  auto [lo, hi] = bracket_lambda(p, k);
  double pad = 1e-6 * std::max(1.0, std::abs(hi));
  lo -= pad;
  hi += pad;
  int expansions = 0;
  while (phase(lo) >= target) {
    if (++expansions > config.max_bracket_expansions)
      throw NoConvergence("shooting: could not bracket eigenvalue from below");
    lo -= (hi - lo);
  }
  while (phase(hi) <= target) {
    if (++expansions > config.max_bracket_expansions)
      throw NoConvergence("shooting: could not bracket eigenvalue from above");
    hi += (hi - lo);
  }

  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)) || mid <= lo || mid >= hi)
      return mid;
    (phase(mid) < target ? lo : hi) = mid;
  }
  throw NoConvergence("shooting: bisection did not reach the requested width");
}

EigenSolution solve_eigen_shooting(const WeightedSLProblem& p, int k, double rel_tol,
                                   const SolverConfig& config) {
  const double lambda = eigenvalue_shooting(p, k, rel_tol, config);
  const Eigenfunction h(p, lambda, parity_of_index(k), config);
  return h.on_grid(config.grid_intervals(p.shift), k);
}

LowestPair solve_lowest_pair(const WeightedSLProblem& p, const SolverConfig& config) {
  LowestPair out;
  out.lambda1 = eigenvalue_shooting(p, 1, config.rel_tol, config);
  out.lambda2 = eigenvalue_shooting(p, 2, config.rel_tol, config);
  out.first = std::make_shared<Eigenfunction>(p, out.lambda1, Parity::Even, config);
  out.second = std::make_shared<Eigenfunction>(p, out.lambda2, Parity::Odd, config);

  const std::size_t n = config.grid_intervals(p.shift);
  out.first_samples = out.first->on_grid(n, 1);
  out.second_samples = out.second->on_grid(n, 2);

  // Wronskian of the two half-problem solutions on [0, a]:
  //   [h1 h2' - h2 h1']_0^a = -(Lambda_2 - Lambda_1) int_0^a w h1 h2,
  // with h2(0) = h1'(0) = 0 and both vanishing at a.
  const std::size_t mid = n / 2;
  const auto& grid = out.first_samples.grid;
  std::vector<Real> overlap(n - mid + 1);
  for (std::size_t i = mid; i <= n; ++i)
    overlap[i - mid] = static_cast<Real>(p.w(grid[i])) * out.first_samples.values[i] *
                       out.second_samples.values[i];
  const Real integral = simpson(overlap, out.first_samples.step());
  const Real h1_0 = out.first_samples.values[mid];
  const Real h2_slope_0 = out.second_samples.derivs[mid];
  if (integral == 0) throw NoConvergence("lowest pair: vanishing overlap integral");
  out.gap = h1_0 * h2_slope_0 / integral;
  return out;
}

}  // namespace gapless
