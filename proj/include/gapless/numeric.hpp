#pragma once

#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace gapless {

// Extended-range scalar for sampled eigenfunctions and everything derived from
// them. The first eigenfunction decays like exp(-c sqrt(mu)) towards the
// centre; at mu = 1e6 its square is around 1e-600, far below double's range.
using Real = long double;

static_assert(std::numeric_limits<Real>::min_exponent10 < -4000,
              "gapless needs an extended-exponent long double (x86 80-bit or IEEE quad)");

inline constexpr double pi = std::numbers::pi;

// N+1 equally spaced abscissae on [lo, hi], endpoints exact. When lo == -hi
// the grid is exactly mirror symmetric and, for even N, contains 0 exactly.
std::vector<double> uniform_grid(double lo, double hi, std::size_t intervals);

// Composite Simpson rule on a uniform grid with spacing `step`; the number of
// intervals (values.size() - 1) must be even.
Real simpson(std::span<const Real> values, double step);

// Serial reference and OpenMP variants of the same rule. Results agree to
// rounding (the parallel sum reassociates).
Real simpson_serial(std::span<const Real> values, double step);
Real simpson_parallel(std::span<const Real> values, double step);

// Smallest even integer >= x (and >= 2).
std::size_t round_up_even(double x);

}  // namespace gapless
