#include <algorithm>
#include <cmath>

#include "gapless/error.hpp"
#include "gapless/slcore.hpp"
#include "prufer.hpp"

namespace gapless {

namespace {

Real raw_value(const detail::PruferState& s, long double shift) {
  return std::exp(static_cast<long double>(s.log_rho) - shift) * static_cast<Real>(std::sin(s.theta));
}

}  // namespace

Eigenfunction::Eigenfunction(const WeightedSLProblem& problem, double lambda, Parity parity,
                             const SolverConfig& config)
    : problem_(problem),
      lambda_(lambda),
      parity_(parity),
      config_(config),
      scale_(detail::prufer_scale(problem)) {
  problem_.validate();
  config_.validate();

  // Normalization reference: Simpson on the right half of the config grid.
  const std::size_t n = config_.grid_intervals(problem_.shift);
  const std::vector<double> grid = uniform_grid(-problem_.half_width, problem_.half_width, n);
  const std::span<const double> half(grid.begin() + static_cast<std::ptrdiff_t>(n / 2), grid.end());
  const auto states = detail::PruferIntegrator(problem_, lambda_, config_).trace(parity_, half);

  long double peak = states.front().log_rho;
  for (const auto& s : states) peak = std::max(peak, static_cast<long double>(s.log_rho));

  std::vector<Real> weighted(states.size());
  Real max_abs = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Real h = raw_value(states[i], peak);
    max_abs = std::max(max_abs, std::abs(h));
    weighted[i] = static_cast<Real>(problem_.w(half[i])) * h * h;
  }
  const Real end_value = raw_value(states.back(), peak);
  end_mismatch_ = max_abs > 0 ? static_cast<double>(std::abs(end_value) / max_abs) : 1.0;
  weighted.back() = 0;  // Dirichlet sample, as in on_grid()

  const Real half_norm = simpson(weighted, grid[1] - grid[0]);
  if (!(half_norm > 0)) throw DegenerateInput("Eigenfunction: zero norm");
  log_norm_ = peak + 0.5L * std::log(2 * half_norm);

  // Sign of the outermost lobe on the right, from the last interior sample.
  const Real outer = raw_value(states[states.size() - 2], peak);
  const int outer_sign = outer >= 0 ? 1 : -1;
  // Mirror the outermost right lobe to -a: even keeps sign, odd flips it.
  sign_ = parity_ == Parity::Even ? outer_sign : -outer_sign;
}

std::vector<PointSample> Eigenfunction::sample(std::span<const double> phis) const {
  std::vector<double> ts;
  ts.reserve(phis.size());
  for (double phi : phis) {
    if (std::abs(phi) > problem_.half_width * (1 + 1e-15))
      throw DomainError("Eigenfunction::sample: abscissa outside [-a, a]");
    ts.push_back(std::min(std::abs(phi), problem_.half_width));
  }
  std::vector<double> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const auto states = detail::PruferIntegrator(problem_, lambda_, config_).trace(parity_, sorted);

  std::vector<PointSample> out(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), ts[i]) -
                                              sorted.begin());
    const auto& s = states[idx];
    const Real amp = sign_ * std::exp(static_cast<long double>(s.log_rho) - log_norm_);
    Real value = amp * static_cast<Real>(std::sin(s.theta));
    Real deriv = amp * static_cast<Real>(scale_ * std::cos(s.theta));
    if (phis[i] < 0.0) {
      if (parity_ == Parity::Even) deriv = -deriv;
      else value = -value;
    }
    out[i] = {value, deriv};
  }
  return out;
}

PointSample Eigenfunction::at(double phi) const {
  const double one[1] = {phi};
  return sample(one).front();
}

EigenSolution Eigenfunction::on_grid(std::size_t intervals, int index) const {
  if (intervals < 4 || intervals % 2 != 0)
    throw ConfigError("Eigenfunction::on_grid: need an even number (>= 4) of intervals");
  EigenSolution out;
  out.index = index;
  out.lambda = lambda_;
  out.parity = parity_;
  out.grid = uniform_grid(-problem_.half_width, problem_.half_width, intervals);
  const auto samples = sample(out.grid);
  out.values.resize(samples.size());
  out.derivs.resize(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out.values[i] = samples[i].value;
    out.derivs[i] = samples[i].deriv;
  }
  out.values.front() = 0;
  out.values.back() = 0;
  if (parity_ == Parity::Odd) out.values[intervals / 2] = 0;
  return out;
}

int interior_zero_count(std::span<const Real> values) {
  int zeros = 0, last = 0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const int s = values[i] > 0 ? 1 : (values[i] < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++zeros;
    last = s;
  }
  return zeros;
}

double grid_residual(const WeightedSLProblem& p, double lambda, std::span<const double> grid,
                     std::span<const Real> values) {
  if (grid.size() != values.size() || grid.size() < 3)
    throw ConfigError("grid_residual: grid and values must match and hold >= 3 points");
  const Real step = static_cast<Real>(grid[1] - grid[0]);
  std::vector<Real> q(grid.size());
  Real q_max = 0, h_max = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    q[i] = static_cast<Real>(lambda * p.w(grid[i]) - p.shift);
    q_max = std::max(q_max, std::abs(q[i]));
    h_max = std::max(h_max, std::abs(values[i]));
  }
  if (h_max == 0) throw DegenerateInput("grid_residual: identically zero samples");
  Real worst = 0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    // Numerov: h[i+1] - 2h[i] + h[i-1] = -(step^2/12) ((qh)[i+1] + 10 (qh)[i] + (qh)[i-1]).
    const Real second = (values[i + 1] - 2 * values[i] + values[i - 1]) / (step * step);
    const Real averaged =
        (q[i + 1] * values[i + 1] + 10 * q[i] * values[i] + q[i - 1] * values[i - 1]) / 12;
    worst = std::max(worst, std::abs(second + averaged));
  }
  return static_cast<double>(worst / (h_max * (1 + q_max)));
}

EigenSolution eigenfunction_samples(const WeightedSLProblem& p, double lambda,
                                    std::size_t intervals, const SolverConfig& config) {
  p.validate();
  const Eigenfunction even(p, lambda, Parity::Even, config);
  const Eigenfunction odd(p, lambda, Parity::Odd, config);
  const Eigenfunction& best = even.end_mismatch() <= odd.end_mismatch() ? even : odd;

  EigenSolution out = best.on_grid(intervals, 1);
  out.index = interior_zero_count(out.values) + 1;
  if (parity_of_index(out.index) != best.parity())
    throw NotAnEigenvalue("eigenfunction_samples: zero count inconsistent with parity");
  const double residual = grid_residual(p, lambda, out.grid, out.values);
  if (residual > 1e-6)
    throw NotAnEigenvalue("eigenfunction_samples: scaled residual " + std::to_string(residual) +
                          " exceeds 1e-6");
  return out;
}

}  // namespace gapless
