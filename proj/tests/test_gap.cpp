#include <doctest.h>

#include <cmath>

#include "gapless/error.hpp"
#include "gapless/gap.hpp"

using namespace gapless;

TEST_CASE("test function psi") {
  const double L = pi / 3, phi0 = L / 4, mu = 100, phi1 = phi0 / mu;
  CHECK(psi_value(0.0, phi1) == 0.0);
  CHECK(psi_value(phi1 / 2, phi1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(psi_value(-L, phi1) == 1.0);
  CHECK(psi_value(L, phi1) == -1.0);
  const std::vector<double> grid = uniform_grid(-L, L, 4000);
  const auto psi = test_function_psi(phi0, mu, grid, L);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(psi[i] == -psi[grid.size() - 1 - i]);
  CHECK_THROWS_AS(test_function_psi(2.0, 1.0, grid, L), ConfigError);
}

TEST_CASE("terms vanish for psi identically one") {
  const WeightedSLProblem p{pi / 3, 10, WeightMode::Secant2};
  const LowestPair pair = solve_lowest_pair(p);
  const auto& h = pair.first_samples;
  std::vector<double> one(h.grid.size(), 1.0), zero(h.grid.size(), 0.0);
  const RayleighTerms t = rayleigh_difference_terms(h, one, zero, 0.1, 10, pair.lambda1);
  CHECK(t.A == 0);
  CHECK(t.B == 0);
  CHECK(t.C == 0);
  CHECK(t.D == 0);
}

TEST_CASE("sampled and exact terms agree when the grid resolves phi1") {
  const double L = pi / 3, mu = 10, phi1 = (L / 4) / mu;
  const WeightedSLProblem p{L, mu, WeightMode::Secant2};
  const LowestPair pair = solve_lowest_pair(p);
  const auto& h = pair.first_samples;
  std::vector<double> psi(h.grid.size()), dpsi(h.grid.size());
  for (std::size_t i = 0; i < h.grid.size(); ++i) {
    psi[i] = psi_value(h.grid[i], phi1);
    dpsi[i] = psi_slope(h.grid[i], phi1);
  }
  const RayleighTerms s = rayleigh_difference_terms(h, psi, dpsi, phi1, mu, pair.lambda1);
  const RayleighTerms e = rayleigh_difference_terms(*pair.first, phi1, mu, pair.lambda1);
  // The sampled inner interval stops at the last grid point inside phi1.
  CHECK(std::abs(static_cast<double>(s.B / e.B) - 1) <= 0.05);
  CHECK(s.A > 0);
  CHECK(s.C < 0);

  const WeightedSLProblem big{L, 1e4, WeightMode::Secant2};
  const LowestPair bp = solve_lowest_pair(big);
  std::vector<double> bpsi(bp.first_samples.grid.size()), bdpsi(bpsi.size());
  CHECK_THROWS_AS(rayleigh_difference_terms(bp.first_samples, bpsi, bdpsi, L / 4 / 1e4, 1e4, bp.lambda1),
                  ResolutionError);
}

TEST_CASE("single instance at mu = 100") {
  const double L = pi / 3;
  const GapReport r = analyze_gap({2, 100, L, {}}, L / 4);
  CHECK(r.gap > 0);
  CHECK(std::abs(static_cast<double>(r.gap) - 0.00939756238018851) <= 1e-12);
  const double lo = std::cos(L) * std::cos(L) * (pi * pi / (4 * L * L) + 100);
  CHECK(lo <= r.lambda1);
  CHECK(r.lambda1 <= 100 + pi * pi / (4 * L * L));
  CHECK(r.gap <= r.rayleigh_upper + 1e-9L);
  CHECK(std::abs(static_cast<double>(r.rayleigh_upper / r.rayleigh_split) - 1) <= 1e-6);
  CHECK(r.terms.A > 0);
  CHECK(r.terms.A <= r.terms.D);
  CHECK(r.diameter == doctest::Approx(2.6622330886191846).epsilon(1e-14));
  CHECK(static_cast<double>(r.d2gap) == doctest::Approx(r.diameter * r.diameter * 0.00939756238018851).epsilon(1e-10));
  CHECK(r.shape.phi1 == L / 4 / 100);
  CHECK(r.shape.c1 > 0);
  CHECK(r.shape.inflection_residual <= 1e-6);
  CHECK(r.shape.positive);
  CHECK(r.shape.evenness <= 1e-10);
  CHECK(r.shape.max_location > r.shape.inflection_point);
  CHECK(r.shape.max_location < L);
  CHECK(r.warnings.empty());
}

TEST_CASE("integral bound and envelopes at mu = 1000") {
  const double L = pi / 3;
  const GapReport r = analyze_gap({2, 1e3, L, {}}, L / 4);
  CHECK(r.shape.integral_bound_ok);
  CHECK(r.shape.central_mass < r.shape.b_bound);
  CHECK(r.shape.envelope_upper_ok);
  CHECK(r.shape.envelope_lower_ok);
  CHECK(r.shape.h0_bound_ok);
  const double c = std::cos(r.shape.inflection_point);
  CHECK(std::abs(c * c - r.lambda1 / r.mu) <= 1e-6);
}

TEST_CASE("scaled gap shrinks with mu") {
  const double L = pi / 3;
  const GapReport a = analyze_gap({2, 1e2, L, {}}, L / 4);
  const GapReport b = analyze_gap({2, 1e4, L, {}}, L / 4);
  CHECK(b.d2gap < a.d2gap);
  CHECK(b.d2gap < 3 * pi * pi);
  CHECK(b.shape.max_location > a.shape.max_location);
  CHECK(b.shape.h1_at_0 / b.shape.h1_max < a.shape.h1_at_0 / a.shape.h1_max);
  CHECK(b.shape.mass_center < a.shape.mass_center);
  CHECK(b.shape.deriv_mass < a.shape.deriv_mass);
}

TEST_CASE("tunnelling gap at mu = 1000 against a 45-digit reference") {
  // Reference: Taylor-series integration of both parity half-problems at 45
  // digits, eigenvalues by secant iteration; 5.671075726065e-15.
  const LowestPair pair = solve_lowest_pair({pi / 3, 1e3, WeightMode::Secant2});
  CHECK(std::abs(static_cast<double>(pair.gap / 5.671075726065e-15L) - 1) <= 1e-9);
}

TEST_CASE("single-peaked profile is a shape anomaly") {
  CHECK_THROWS_AS(analyze_gap({2, 3, pi / 3, {}}, pi / 12), ShapeAnomaly);
}

TEST_CASE("analyze_gap argument checks") {
  CHECK_THROWS_AS(analyze_gap({2, 100, pi / 3, {}}, pi / 5), ConfigError);
  CHECK_THROWS_AS(analyze_gap({2, 100, pi / 3, {}}, 0.0), ConfigError);
  CHECK_THROWS_AS(analyze_gap({3, 100, pi / 3, {pi / 4}}, pi / 12), UnsupportedDimension);
}

TEST_CASE("threshold location") {
  const std::vector<double> mus{1, 2, 3, 4};
  CHECK(locate_threshold(mus, {false, true, true, true}) == 2);
  CHECK(locate_threshold(mus, {true, false, true, true}) == 3);
  CHECK(locate_threshold(mus, {true, true, true, true}) == 1);
  CHECK(locate_threshold(mus, {true, true, true, false}) == kNoThreshold);
}
