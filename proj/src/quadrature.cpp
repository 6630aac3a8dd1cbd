#include <cmath>
#include <stdexcept>

#include "gapless/error.hpp"
#include "gapless/numeric.hpp"

namespace gapless {

std::vector<double> uniform_grid(double lo, double hi, std::size_t intervals) {
  if (intervals == 0) throw ConfigError("uniform_grid: need at least one interval");
  std::vector<double> grid(intervals + 1);
  const double n = static_cast<double>(intervals);
  const bool symmetric = lo == -hi;
  for (std::size_t i = 0; i <= intervals; ++i) {
    if (symmetric) {
      // hi * (2i - N) / N keeps grid[N - i] == -grid[i] bit for bit.
      const double twice = 2.0 * static_cast<double>(i) - n;
      grid[i] = hi * (twice / n);
    } else {
      const double t = static_cast<double>(i) / n;
      grid[i] = lo + (hi - lo) * t;
    }
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

namespace {

void require_even(std::size_t size) {
  if (size < 3 || (size - 1) % 2 != 0)
    throw ConfigError("simpson: need an even number (>= 2) of intervals");
}

}  // namespace

Real simpson_serial(std::span<const Real> values, double step) {
  require_even(values.size());
  const std::size_t n = values.size() - 1;
  Real odd = 0, even = 0;
  for (std::size_t i = 1; i < n; i += 2) odd += values[i];
  for (std::size_t i = 2; i < n; i += 2) even += values[i];
  return static_cast<Real>(step) / 3 * (values.front() + values.back() + 4 * odd + 2 * even);
}

Real simpson_parallel(std::span<const Real> values, double step) {
  require_even(values.size());
  const long n = static_cast<long>(values.size()) - 1;
  Real interior = 0;
#pragma omp parallel for reduction(+ : interior) schedule(static)
  for (long i = 1; i < n; ++i) interior += (i % 2 == 1 ? 4 : 2) * values[static_cast<std::size_t>(i)];
  return static_cast<Real>(step) / 3 * (values.front() + values.back() + interior);
}

Real simpson(std::span<const Real> values, double step) {
  // Sample grids here are at most ~1e5 points; threading overhead dominates
  // below that, so the serial rule is the production path.
  return simpson_serial(values, step);
}

std::size_t round_up_even(double x) {
  if (!(x >= 2.0)) return 2;
  auto n = static_cast<std::size_t>(std::ceil(x));
  return n % 2 == 0 ? n : n + 1;
}

}  // namespace gapless
