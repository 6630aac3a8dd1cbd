#include <algorithm>
#include <cmath>

#include "gapless/error.hpp"
#include "gapless/gap.hpp"

namespace gapless {

double psi_value(double phi, double phi1) {
  if (phi <= -phi1) return 1.0;
  if (phi >= phi1) return -1.0;
  return -phi / phi1;
}

double psi_slope(double phi, double phi1) {
  return std::abs(phi) < phi1 ? -1.0 / phi1 : 0.0;
}

std::vector<double> test_function_psi(double phi0, double mu, std::span<const double> grid,
                                      double L) {
  if (!(phi0 > 0) || !(mu > 0)) throw ConfigError("test_function_psi: phi0 and mu must be positive");
  const double phi1 = phi0 / mu;
  if (phi1 >= L) throw ConfigError("test_function_psi: phi1 = phi0/mu must be below L");
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = psi_value(grid[i], phi1);
  return out;
}

namespace {

struct TermIntegrands {
  std::vector<Real> a, b, c;
};

RayleighTerms integrate_terms(const TermIntegrands& t, double step, double mu, double lambda1) {
  RayleighTerms out;
  out.A = simpson(t.a, step);
  out.B = simpson(t.b, step);
  out.C = static_cast<Real>(mu) * simpson(t.c, step);
  out.D = static_cast<Real>(lambda1) * out.A;
  return out;
}

void push_terms(TermIntegrands& t, Real h, Real dh, double psi, double dpsi, double w) {
  const Real ph = static_cast<Real>(psi) * h;
  const Real dph = static_cast<Real>(dpsi) * h + static_cast<Real>(psi) * dh;
  t.a.push_back((h * h - ph * ph) * static_cast<Real>(w));
  t.b.push_back(dph * dph - dh * dh);
  t.c.push_back(ph * ph - h * h);
}

}  // namespace

RayleighTerms rayleigh_difference_terms(const Eigenfunction& h1, double phi1, double mu,
                                        double lambda1, std::size_t intervals) {
  if (!(phi1 > 0) || phi1 >= h1.problem().half_width)
    throw ConfigError("rayleigh_difference_terms: phi1 must lie in (0, a)");
  if (intervals < 64 || intervals % 2 != 0)
    throw ResolutionError("rayleigh_difference_terms: inner grid needs an even count >= 64");
  const std::vector<double> grid = uniform_grid(-phi1, phi1, intervals);
  const auto samples = h1.sample(grid);
  TermIntegrands t;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // The closed inner interval: psi' = -1/phi1 throughout, including the ends.
    push_terms(t, samples[i].value, samples[i].deriv, -grid[i] / phi1, -1.0 / phi1,
               h1.problem().w(grid[i]));
  }
  return integrate_terms(t, grid[1] - grid[0], mu, lambda1);
}

RayleighTerms rayleigh_difference_terms(const EigenSolution& h1, std::span<const double> psi,
                                        std::span<const double> dpsi, double phi1, double mu,
                                        double lambda1) {
  if (psi.size() != h1.grid.size() || dpsi.size() != h1.grid.size()) throw ConfigError("rayleigh_difference_terms: grid mismatch");
  if (h1.derivs.size() != h1.grid.size())
    throw ConfigError("rayleigh_difference_terms: sampled form needs derivatives");
  std::size_t first = h1.grid.size(), last = 0;
  for (std::size_t i = 0; i < h1.grid.size(); ++i) {
    if (std::abs(h1.grid[i]) <= phi1) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first >= last || last - first < 64)
    throw ResolutionError("rayleigh_difference_terms: fewer than 64 grid intervals in [-phi1, phi1]");
  if ((last - first) % 2 != 0) --last;
  TermIntegrands t;
  for (std::size_t i = first; i <= last; ++i)
    push_terms(t, h1.values[i], h1.derivs[i], psi[i], dpsi[i],
               weight_value(WeightMode::Secant2, h1.grid[i]));
  return integrate_terms(t, h1.step(), mu, lambda1);
}

GapReport analyze_gap(const StripDomain& d, double phi0, const SolverConfig& config) {
  d.validate();
  if (d.n != 2) throw UnsupportedDimension("analyze_gap: n = 2 only; use the chain for n >= 3");
  if (!(phi0 > 0) || !(phi0 < d.L / 2)) throw ConfigError("analyze_gap: phi0 must lie in (0, L/2)");
  config.validate();

  const WeightedSLProblem p{d.L, d.mu, WeightMode::Secant2};
  const LowestPair pair = solve_lowest_pair(p, config);

  GapReport r;
  r.mu = d.mu;
  r.L = d.L;
  r.phi0 = phi0;
  r.lambda1 = pair.lambda1;
  r.lambda2 = pair.lambda2;
  r.gap = pair.gap;
  if (!(r.gap > 0)) throw NoConvergence("analyze_gap: non-positive gap");
  r.diameter = diameter(d);
  r.d2gap = static_cast<Real>(r.diameter) * r.diameter * r.gap;

  const double phi1 = phi0 / d.mu;
  r.terms = rayleigh_difference_terms(*pair.first, phi1, d.mu, r.lambda1, config.inner_points);
  r.rayleigh_split = r.terms.upper();
  r.rayleigh_upper = direct_rayleigh_difference(*pair.first, phi1, d.mu,
                                                config.grid_intervals(d.mu), 2 * config.inner_points);
  const Real rel = std::abs(r.rayleigh_upper - r.rayleigh_split) / std::abs(r.rayleigh_upper);
  if (!(rel <= 1e-6))
    r.warnings.push_back("rayleigh: split and direct differ by " +
                         std::to_string(static_cast<double>(rel)) + " relative");

  r.shape = shape_report(pair.first_samples, *pair.first, d.mu, r.lambda1, phi0, config.inner_points);
  return r;
}

double locate_threshold(std::span<const double> mus, const std::vector<bool>& holds) {
  if (mus.size() != holds.size()) throw ConfigError("locate_threshold: size mismatch");
  std::size_t from = mus.size();
  while (from > 0 && holds[from - 1]) --from;
  return from < mus.size() ? mus[from] : kNoThreshold;
}

SweepSummary summarize_sweep(const std::vector<GapReport>& r) {
  SweepSummary s;
  if (r.empty()) return s;
  std::vector<double> mus;
  for (const auto& x : r) mus.push_back(x.mu);
  const double cos2 = std::cos(r.front().L) * std::cos(r.front().L);
  const double cos2_half = std::cos(r.front().L / 2) * std::cos(r.front().L / 2);

  s.d2gap_decreasing = strictly_decreasing(r, [](const GapReport& x) { return x.d2gap; });
  s.d2gap_below_3pi2 = std::any_of(r.begin(), r.end(),
                                   [](const GapReport& x) { return x.d2gap < 3 * pi * pi; });
  s.d2gap_ratio = r.back().d2gap / r.front().d2gap;

  s.ratio_decreasing = strictly_decreasing(r, [](const GapReport& x) { return x.lambda1 / x.mu; });
  s.ratio_above_cos2 = std::all_of(r.begin(), r.end(),
                                   [&](const GapReport& x) { return x.lambda1 / x.mu > cos2; });
  s.excess_ratio = (r.back().lambda1 / r.back().mu - cos2) / (r.front().lambda1 / r.front().mu - cos2);

  std::vector<bool> upper, lower_env, h0b;
  s.bracket_lower_ok = s.gap_est_ok = s.envelope_upper_all = s.integral_bound_all = s.positive_all = true;
  for (const auto& x : r) {
    const double L = x.L;
    const double lo = std::cos(L) * std::cos(L) * (pi * pi / (4 * L * L) + x.mu);
    s.bracket_lower_ok = s.bracket_lower_ok && lo <= x.lambda1;
    upper.push_back(x.lambda1 <= x.mu * cos2_half);
    s.gap_est_ok = s.gap_est_ok && x.gap <= x.rayleigh_upper + 1e-9L;
    const Real rel = std::abs(x.rayleigh_upper - x.rayleigh_split) / std::abs(x.rayleigh_upper);
    s.worst_split_rel = std::max(s.worst_split_rel, static_cast<double>(rel));
    lower_env.push_back(x.shape.envelope_lower_ok);
    h0b.push_back(x.shape.h0_bound_ok);
    s.envelope_upper_all = s.envelope_upper_all && x.shape.envelope_upper_ok;
    s.integral_bound_all = s.integral_bound_all && x.shape.integral_bound_ok;
    s.positive_all = s.positive_all && x.shape.positive;
    s.worst_inflection = std::max(s.worst_inflection, x.shape.inflection_residual);
    s.worst_evenness = std::max(s.worst_evenness, x.shape.evenness);
  }
  s.bracket_threshold = locate_threshold(mus, upper);
  s.envelope_lower_threshold = locate_threshold(mus, lower_env);
  s.h0_bound_threshold = locate_threshold(mus, h0b);

  s.max_location_increasing =
      strictly_decreasing(r, [](const GapReport& x) { return -x.shape.max_location; });
  s.h_ratio_decreasing =
      strictly_decreasing(r, [](const GapReport& x) { return x.shape.h1_at_0 / x.shape.h1_max; });
  s.mass_center_decreasing =
      strictly_decreasing(r, [](const GapReport& x) { return x.shape.mass_center; });
  s.deriv_mass_decreasing =
      strictly_decreasing(r, [](const GapReport& x) { return x.shape.deriv_mass; });
  s.terms_decreasing =
      strictly_decreasing(r, [](const GapReport& x) { return std::abs(x.terms.A); }) &&
      strictly_decreasing(r, [](const GapReport& x) { return std::abs(x.terms.B); }) &&
      strictly_decreasing(r, [](const GapReport& x) { return std::abs(x.terms.C); }) &&
      strictly_decreasing(r, [](const GapReport& x) { return x.terms.D; });
  return s;
}

}  // namespace gapless
