#include <cmath>

#include "gapless/error.hpp"
#include "gapless/slcore.hpp"

namespace gapless {

namespace {

// Fourth-order differences: centred in the interior, one-sided near the ends.
std::vector<Real> differentiate(std::span<const Real> h, Real step) {
  const std::size_t n = h.size();
  std::vector<Real> d(n);
  if (n < 5) throw ConfigError("rayleigh_quotient: need at least 5 samples");
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (-h[i + 2] + 8 * h[i + 1] - 8 * h[i - 1] + h[i - 2]) / (12 * step);
  d[0] = (-25 * h[0] + 48 * h[1] - 36 * h[2] + 16 * h[3] - 3 * h[4]) / (12 * step);
  d[1] = (-3 * h[0] - 10 * h[1] + 18 * h[2] - 6 * h[3] + h[4]) / (12 * step);
  const std::size_t l = n - 1;
  d[l] = (25 * h[l] - 48 * h[l - 1] + 36 * h[l - 2] - 16 * h[l - 3] + 3 * h[l - 4]) / (12 * step);
  d[l - 1] = (3 * h[l] + 10 * h[l - 1] - 18 * h[l - 2] + 6 * h[l - 3] - h[l - 4]) / (12 * step);
  return d;
}

}  // namespace

Real rayleigh_quotient(std::span<const double> grid, std::span<const Real> values,
                       std::span<const Real> derivs, double shift, WeightMode weight) {
  if (grid.size() != values.size() || (!derivs.empty() && derivs.size() != values.size()))
    throw ConfigError("rayleigh_quotient: grid, values and derivs must have equal length");
  const Real step = static_cast<Real>(grid[1] - grid[0]);
  std::vector<Real> fd;
  if (derivs.empty()) {
    fd = differentiate(values, step);
    derivs = fd;
  }
  std::vector<Real> energy(values.size()), mass(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    energy[i] = derivs[i] * derivs[i] + static_cast<Real>(shift) * values[i] * values[i];
    mass[i] = static_cast<Real>(weight_value(weight, grid[i])) * values[i] * values[i];
  }
  const Real denominator = simpson(mass, grid[1] - grid[0]);
  if (!(denominator > 0)) throw DegenerateInput("rayleigh_quotient: zero weighted norm");
  return simpson(energy, grid[1] - grid[0]) / denominator;
}

Real rayleigh_quotient(const EigenSolution& s, double shift, WeightMode weight) {
  return rayleigh_quotient(s.grid, s.values, s.derivs, shift, weight);
}

}  // namespace gapless
