#include <algorithm>
#include <cmath>

#include "gapless/error.hpp"
#include "gapless/gap.hpp"

namespace gapless {

namespace {

// Relative slack on the pointwise envelope comparisons (sample accuracy).
constexpr long double kEnvelopeSlack = 1e-9L;

double cross(double x0, double x1, long double f0, long double f1) {
  return x0 + static_cast<double>(f0 / (f0 - f1)) * (x1 - x0);
}

// Repeat the sign-change search on a finer local grid; the second difference
// carries an O(step^2) bias that shifts the root.
double refine_inflection(const Eigenfunction& f, double lo, double hi) {
  constexpr std::size_t kLocal = 48;
  const std::vector<double> xs = uniform_grid(lo, hi, kLocal);
  const auto ys = f.sample(xs);
  auto second = [&](std::size_t i) {
    return ys[i + 1].value - 2 * ys[i].value + ys[i - 1].value;
  };
  for (std::size_t i = 1; i + 1 < kLocal; ++i)
    if (second(i) > 0 && second(i + 1) <= 0) return cross(xs[i], xs[i + 1], second(i), second(i + 1));
  throw ShapeAnomaly("shape_report: inflection lost on refinement");
}

}  // namespace

IntegralBounds integral_bound_check(const EigenSolution& h1, const Eigenfunction& f, double mu,
                                    double lambda1, double phi0, std::size_t inner_intervals) {
  const double L = f.problem().half_width;
  if (!(phi0 > 0) || !(phi0 < L)) throw ConfigError("integral_bound_check: phi0 must lie in (0, L)");
  IntegralBounds out;
  const double cos2L = std::cos(L) * std::cos(L);
  out.b_bound = (lambda1 / mu - cos2L) / (std::cos(phi0) * std::cos(phi0) - cos2L);

  // Central weighted mass on [-phi0, phi0], at least as fine as the sample grid.
  const std::size_t m = std::max(inner_intervals, round_up_even(2 * phi0 / h1.step()));
  const std::vector<double> central = uniform_grid(-phi0, phi0, m);
  const auto cs = f.sample(central);
  std::vector<Real> integrand(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    integrand[i] = cs[i].value * cs[i].value * static_cast<Real>(weight_value(WeightMode::Secant2, central[i]));
  out.central_mass = simpson(integrand, central[1] - central[0]);
  out.bound_ok = out.central_mass < out.b_bound;

  const double phi1 = phi0 / mu;
  const std::vector<double> inner = uniform_grid(-phi1, phi1, inner_intervals);
  const auto is = f.sample(inner);
  std::vector<Real> h2(is.size()), d2(is.size());
  for (std::size_t i = 0; i < is.size(); ++i) {
    h2[i] = is[i].value * is[i].value;
    d2[i] = is[i].deriv * is[i].deriv;
  }
  const double step = inner[1] - inner[0];
  out.mass_center = static_cast<Real>(mu) * static_cast<Real>(mu) * simpson(h2, step);
  out.deriv_mass = simpson(d2, step);
  return out;
}

ShapeReport shape_report(const EigenSolution& h1, const Eigenfunction& f, double mu,
                         double lambda1, double phi0, std::size_t inner_intervals) {
  if (h1.index != 1) throw ConfigError("shape_report: needs the first eigenfunction");
  const std::size_t n = h1.grid.size() - 1;
  const std::size_t mid = n / 2;
  const auto& x = h1.grid;
  const auto& v = h1.values;
  const double L = f.problem().half_width;

  ShapeReport s;
  s.phi0 = phi0;
  s.phi1 = phi0 / mu;
  const double q = std::cos(2 * phi0) / std::cos(phi0);
  s.c1 = 1 - q * q;
  s.h1_at_0 = v[mid];
  s.h1_max = *std::max_element(v.begin(), v.end());

  s.positive = std::all_of(v.begin() + 1, v.end() - 1, [](Real y) { return y > 0; });
  Real odd_part = 0;
  for (std::size_t i = 0; i <= mid; ++i) odd_part = std::max(odd_part, std::abs(v[i] - v[n - i]));
  s.evenness = static_cast<double>(odd_part / s.h1_max);

  // Right maximum: h' changes from + to - (h'(0) = 0 is skipped).
  std::vector<Real> slope(v.size());
  if (h1.derivs.size() == v.size()) {
    slope = h1.derivs;
  } else {
    for (std::size_t i = 1; i < n; ++i) slope[i] = (v[i + 1] - v[i - 1]) / (2 * h1.step());
  }
  std::size_t peak = 0;
  for (std::size_t i = mid + 1; i + 1 < n; ++i)
    if (slope[i] > 0 && slope[i + 1] <= 0) {
      peak = i;
      break;
    }
  if (peak == 0) throw ShapeAnomaly("shape_report: no interior maximum away from 0 (single peak)");
  s.max_location = cross(x[peak], x[peak + 1], slope[peak], slope[peak + 1]);

  // Inflection: the discrete second difference turns from convex to concave.
  auto second = [&](std::size_t i) { return v[i + 1] - 2 * v[i] + v[i - 1]; };
  std::size_t turn = 0;
  for (std::size_t i = mid + 1; i + 1 < n; ++i)
    if (second(i) > 0 && second(i + 1) <= 0) {
      turn = i;
      break;
    }
  if (turn == 0) throw ShapeAnomaly("shape_report: no inflection point found");
  s.inflection_point = refine_inflection(f, x[turn - 1], x[turn + 2]);
  const double c = std::cos(s.inflection_point);
  s.inflection_residual = std::abs(c * c - lambda1 / mu);

  // Sturm comparison envelopes on (-phi0, phi0).
  const long double h0 = s.h1_at_0;
  const long double up_rate = std::sqrt(static_cast<long double>(mu)) * std::sin(L);
  const long double low_rate = std::sqrt(static_cast<long double>(mu) * s.c1);
  s.envelope_upper_ok = s.envelope_lower_ok = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(std::abs(x[i]) < phi0)) continue;
    const long double upper = h0 * std::cosh(up_rate * x[i]);
    const long double lower = h0 * std::cosh(low_rate * x[i]);
    if (v[i] > upper * (1 + kEnvelopeSlack)) s.envelope_upper_ok = false;
    if (v[i] < lower * (1 - kEnvelopeSlack)) s.envelope_lower_ok = false;
  }
  s.envelopes_ok = s.envelope_upper_ok && s.envelope_lower_ok;

  const IntegralBounds ib = integral_bound_check(h1, f, mu, lambda1, phi0, inner_intervals);
  s.b_bound = ib.b_bound;
  s.central_mass = ib.central_mass;
  s.integral_bound_ok = ib.bound_ok;
  s.mass_center = ib.mass_center;
  s.deriv_mass = ib.deriv_mass;

  s.h0_bound_rhs = 4 * static_cast<Real>(s.b_bound) * std::exp(-low_rate * phi0 / 2);
  s.h0_bound_ok = h0 * h0 <= s.h0_bound_rhs;
  return s;
}

}  // namespace gapless
