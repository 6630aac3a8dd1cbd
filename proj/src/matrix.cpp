#include <algorithm>
#include <bit>
#include <cmath>

#include "gapless/error.hpp"
#include "gapless/pencil.hpp"
#include "gapless/slcore.hpp"

namespace gapless {

namespace {

double pencil_eigenvalue(const Pencil& pencil, double shift, int k, const MatrixOptions& options) {
  const auto [lo, hi] = pencil_bounds(pencil, shift);
  return options.parallel
             ? multisect_eigenvalue_parallel(pencil, k, lo, hi, options.rel_tol)
             : bisect_eigenvalue_serial(pencil, k, lo, hi, options.rel_tol);
}

// Sign convention shared with the shooting solver: positive on the lobe
// nearest -a.
int left_lobe_sign(const std::vector<double>& v) {
  double best = 0.0;
  int sign = 1;
  int lobe = 0;
  for (double x : v) {
    const int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (s == 0) continue;
    if (lobe == 0) lobe = s;
    if (s != lobe) break;
    if (std::abs(x) > best) {
      best = std::abs(x);
      sign = s;
    }
  }
  return sign;
}

}  // namespace

std::size_t default_matrix_intervals(const WeightedSLProblem& p) {
  const double wanted = std::max(4096.0, 256.0 * p.half_width * std::sqrt(std::abs(p.shift)));
  const auto n = static_cast<std::size_t>(std::min(wanted, 262144.0));
  return std::bit_ceil(n);
}

EigenSolution solve_eigen_matrix(const WeightedSLProblem& p, int k, std::size_t intervals,
                                 const MatrixOptions& options) {
  p.validate();
  if (intervals < 64 || intervals % 2 != 0)
    throw ConfigError("solve_eigen_matrix: need an even number (>= 64) of intervals");
  if (k < 1) throw ConfigError("solve_eigen_matrix: index must be >= 1");

  EigenSolution out;
  out.index = k;
  out.parity = parity_of_index(k);

  const Pencil coarse = Pencil::assemble(p, intervals);
  const double coarse_value = pencil_eigenvalue(coarse, p.shift, k, options);
  double fine_value = coarse_value;
  const Pencil* finest = &coarse;
  Pencil fine;
  if (options.richardson) {
    fine = Pencil::assemble(p, 2 * intervals);
    fine_value = pencil_eigenvalue(fine, p.shift, k, options);
    finest = &fine;
    // Second-order scheme: halving the step cuts the error by four.
    out.lambda = (4.0 * fine_value - coarse_value) / 3.0;
    const double spread = std::abs(fine_value - coarse_value) / std::abs(fine_value);
    if (spread > 1e-4)
      out.warnings.push_back("resolution: consecutive grids differ by " + std::to_string(spread) +
                             " relative; refine the grid");
  } else {
    out.lambda = coarse_value;
  }

  std::vector<double> v = pencil_eigenvector(*finest, fine_value, out.parity);
  const int sign = left_lobe_sign(v);

  const std::size_t n = finest->size() + 1;
  out.grid = uniform_grid(-p.half_width, p.half_width, n);
  out.values.assign(n + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) out.values[i + 1] = static_cast<Real>(sign * v[i]);

  std::vector<Real> mass(out.values.size());
  for (std::size_t i = 0; i < mass.size(); ++i)
    mass[i] = static_cast<Real>(p.w(out.grid[i])) * out.values[i] * out.values[i];
  const Real norm = std::sqrt(simpson(mass, out.step()));
  for (Real& x : out.values) x /= norm;
  return out;
}

}  // namespace gapless
