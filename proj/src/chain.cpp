#include <cmath>
#include <string>

#include "gapless/chain.hpp"
#include "gapless/error.hpp"

namespace gapless {

double radial_separation_constant(int n, double mu, int k) {
  if (n < 2) throw ConfigError("radial_separation_constant: n must be >= 2");
  if (!(mu > 0) || k < 1) throw ConfigError("radial_separation_constant: need mu > 0, k >= 1");
  const double k2mu = static_cast<double>(k) * k * mu;
  return n == 2 ? k2mu : static_cast<double>(n - 2) * (n - 2) + k2mu;
}

std::pair<double, double> radial_interval(int n, double mu) {
  if (n < 3) throw UnsupportedDimension("radial_interval: closed form needs n >= 3");
  if (!(mu > 0)) throw ConfigError("radial_interval: mu must be positive");
  const double shift = std::log(static_cast<double>(n - 2));
  return {-(n - 2) * pi / std::sqrt(mu) - shift, -shift};
}

double radial_eigenfunction(int n, double mu, double s) {
  const auto [lo, hi] = radial_interval(n, mu);
  if (s < lo || s > hi) throw DomainError("radial_eigenfunction: s outside the radial interval");
  const double omega = std::sqrt(mu) / (n - 2);
  return -std::exp(s) * std::sin(omega * (s + std::log(static_cast<double>(n - 2))));
}

double alpha_exponent(int n, int i) {
  if (n < 2 || i < 2 || i > n) throw ConfigError("alpha_exponent: need 2 <= i <= n");
  return i == n ? n / 2.0 - 1 : n - 1 - i / 2.0;
}

ChainLevel kappa_step(double kappa_prev, int n, int i, double delta_i, const SolverConfig& config) {
  if (i < 2 || i >= n) throw ConfigError("kappa_step: need 2 <= i <= n-1");
  ChainLevel level;
  level.i = i;
  level.alpha = alpha_exponent(n, i);
  level.delta = delta_i;
  level.shift = kappa_prev - level.alpha * level.alpha;
  // phi = omega - pi/2 turns csc^2(omega) into sec^2(phi).
  const WeightedSLProblem p{delta_i, level.shift, WeightMode::Secant2};
  const double lambda = eigenvalue_shooting(p, 1, config.rel_tol, config);
  const double c = std::cos(delta_i);
  level.kappa = lambda + level.alpha * (level.alpha - 1);
  level.bound_margin = lambda - c * c * level.shift;
  return level;
}

bool KappaChain::bound_holds() const {
  for (const auto& l : levels)
    if (l.bound_margin < 0) return false;
  return true;
}

KappaChain chain_gap(int n, double mu, const std::vector<double>& deltas, double L,
                     const SolverConfig& config) {
  if (n < 2) throw ConfigError("chain_gap: n must be >= 2");
  if (deltas.size() != static_cast<std::size_t>(n - 2))
    throw ConfigError("chain_gap: need n-2 = " + std::to_string(n - 2) + " angular half-widths");
  for (double d : deltas)
    if (!(d > 0 && d < pi / 2)) throw ConfigError("chain_gap: every delta must lie in (0, pi/2)");
  if (!(L > 0 && L < pi / 2)) throw ConfigError("chain_gap: L must lie in (0, pi/2)");
  config.validate();

  KappaChain out;
  out.n = n;
  out.mu = mu;
  out.deltas = deltas;
  out.L = L;
  out.kappas.push_back(radial_separation_constant(n, mu, 1));
  for (int i = 2; i <= n; ++i) out.alphas.push_back(alpha_exponent(n, i));

  for (int i = 2; i <= n - 1; ++i) {
    ChainLevel level = kappa_step(out.kappas.back(), n, i, deltas[static_cast<std::size_t>(i - 2)], config);
    out.kappas.push_back(level.kappa);
    out.levels.push_back(level);
  }

  const double alpha_n = out.alphas.back();
  out.final_shift = out.kappas.back() - alpha_n * alpha_n;
  const WeightedSLProblem last{L, out.final_shift, WeightMode::Secant2};
  const LowestPair pair = solve_lowest_pair(last, config);
  const double offset = alpha_n * (alpha_n - 1);
  out.lambda1 = pair.lambda1 + offset;
  out.lambda2 = pair.lambda2 + offset;
  out.gap = pair.gap;
  return out;
}

}  // namespace gapless
