#include <algorithm>
#include <cmath>
#include <limits>

#include "gapless/error.hpp"
#include "gapless/pencil.hpp"

#include <omp.h>

namespace gapless {

Pencil Pencil::assemble(const WeightedSLProblem& p, std::size_t intervals) {
  p.validate();
  if (intervals < 4) throw ConfigError("Pencil: need at least 4 intervals");
  Pencil out;
  const std::vector<double> grid = uniform_grid(-p.half_width, p.half_width, intervals);
  out.step = grid[1] - grid[0];
  const long double h2 = static_cast<long double>(out.step) * out.step;
  out.interior.assign(grid.begin() + 1, grid.end() - 1);
  out.diagonal.resize(out.interior.size());
  out.mass.resize(out.interior.size());
  for (std::size_t i = 0; i < out.interior.size(); ++i) {
    out.diagonal[i] = 2.0L + static_cast<long double>(p.shift) * h2;
    out.mass[i] = h2 * static_cast<long double>(p.w(out.interior[i]));
  }
  return out;
}

std::size_t sturm_count(const Pencil& pencil, long double sigma) {
  // Pivots of the LDL^T factorization of A' - sigma W' (off-diagonals -1).
  constexpr long double tiny = std::numeric_limits<long double>::min() * 1e4L;
  std::size_t negatives = 0;
  long double d = 1.0L;
  bool first = true;
  for (std::size_t i = 0; i < pencil.size(); ++i) {
    long double pivot = pencil.diagonal[i] - sigma * pencil.mass[i];
    if (!first) pivot -= 1.0L / d;
    first = false;
    if (pivot == 0.0L) pivot = -tiny;
    if (pivot < 0.0L) ++negatives;
    d = pivot;
  }
  return negatives;
}

std::pair<double, double> pencil_bounds(const Pencil& pencil, double shift) {
  // Gershgorin on A' with W' >= step^2 min(w) and Rayleigh's lower bound
  // Lambda >= min(0, m) for the continuous operator's discrete analogue.
  long double min_mass = pencil.mass.front();
  for (long double m : pencil.mass) min_mass = std::min(min_mass, m);
  const long double top = (pencil.diagonal.front() + 2.0L) / min_mass;
  return {std::min(0.0, shift) - 1.0, static_cast<double>(top) + 1.0};
}

namespace {

bool converged(double lo, double hi, double rel_tol) {
  return hi - lo <= rel_tol * std::max({std::abs(lo), std::abs(hi), 1e-300});
}

void check_index(const Pencil& pencil, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > pencil.size())
    throw ConfigError("pencil: eigenvalue index out of range");
}

}  // namespace

double bisect_eigenvalue_serial(const Pencil& pencil, int k, double lo, double hi, double rel_tol) {
  check_index(pencil, k);
  const auto target = static_cast<std::size_t>(k);
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (converged(lo, hi, rel_tol) || mid <= lo || mid >= hi) return mid;
    (sturm_count(pencil, mid) >= target ? hi : lo) = mid;
  }
  throw NoConvergence("pencil bisection did not converge");
}

double multisect_eigenvalue_parallel(const Pencil& pencil, int k, double lo, double hi,
                                     double rel_tol, int points) {
  check_index(pencil, k);
  if (points <= 0) points = std::max(3, 2 * omp_get_max_threads() - 1);
  const auto target = static_cast<std::size_t>(k);
  std::vector<double> shifts(static_cast<std::size_t>(points));
  std::vector<std::size_t> counts(shifts.size());
  for (int round = 0; round < 2000; ++round) {
    if (converged(lo, hi, rel_tol)) return 0.5 * (lo + hi);
    const double width = hi - lo;
    for (int j = 0; j < points; ++j)
      shifts[static_cast<std::size_t>(j)] = lo + width * (j + 1) / (points + 1);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < points; ++j)
      counts[static_cast<std::size_t>(j)] = sturm_count(pencil, shifts[static_cast<std::size_t>(j)]);
    // counts are nondecreasing in the shift; keep the first subinterval that
    // crosses the target count.
    double new_lo = lo, new_hi = hi;
    for (int j = 0; j < points; ++j) {
      const auto idx = static_cast<std::size_t>(j);
      if (counts[idx] >= target) {
        new_hi = shifts[idx];
        break;
      }
      new_lo = shifts[idx];
    }
    if (new_lo == lo && new_hi == hi) return 0.5 * (lo + hi);
    lo = new_lo;
    hi = new_hi;
  }
  throw NoConvergence("pencil multisection did not converge");
}

namespace {

// Tridiagonal solve with partial pivoting (the dgtsv elimination); sub- and
// super-diagonals are -1 on entry. Solves in place into rhs.
void solve_shifted(const Pencil& pencil, double lambda, std::vector<double>& rhs) {
  const std::size_t n = pencil.size();
  std::vector<double> d(n), dl(n, -1.0), du(n, -1.0);
  for (std::size_t i = 0; i < n; ++i)
    d[i] = static_cast<double>(pencil.diagonal[i] - static_cast<long double>(lambda) * pencil.mass[i]);
  const double tiny = 1e-300;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      rhs[i + 1] -= fact * rhs[i];
      dl[i] = 0.0;
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        dl[i] = du[i + 1];
        du[i + 1] = -fact * dl[i];
      } else {
        dl[i] = 0.0;
      }
      du[i] = temp;
      const double b = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = b - fact * rhs[i + 1];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  rhs[n - 1] /= d[n - 1];
  if (n >= 2) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
  for (std::size_t i = n - 2; i-- > 0;)
    rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - dl[i] * rhs[i + 2]) / d[i];
}

void project_parity(std::vector<double>& v, Parity parity) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n / 2 + n % 2; ++i) {
    const std::size_t j = n - 1 - i;
    const double a = v[i], b = v[j];
    if (parity == Parity::Even) {
      v[i] = v[j] = 0.5 * (a + b);
    } else {
      v[i] = 0.5 * (a - b);
      v[j] = -v[i];
    }
  }
}

void scale_to_unit_max(std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0 || !std::isfinite(peak)) throw NoConvergence("inverse iteration broke down");
  for (double& x : v) x /= peak;
}

}  // namespace

std::vector<double> pencil_eigenvector(const Pencil& pencil, double lambda, Parity parity,
                                       int iterations) {
  const std::size_t n = pencil.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = pencil.interior[i];
    v[i] = parity == Parity::Even ? 1.0 : (phi < 0 ? 1.0 : (phi > 0 ? -1.0 : 0.0));
  }
  // Nudge off the eigenvalue so the shifted matrix stays nonsingular.
  const double sigma = lambda * (1.0 + 1e-13) + 1e-300;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) v[i] *= static_cast<double>(pencil.mass[i]);
    solve_shifted(pencil, sigma, v);
    project_parity(v, parity);
    scale_to_unit_max(v);
  }
  return v;
}

}  // namespace gapless
