#include <doctest.h>

#include <cmath>

#include "gapless/chain.hpp"
#include "gapless/error.hpp"
#include "gapless/gap.hpp"

using namespace gapless;

TEST_CASE("radial separation constant") {
  CHECK(radial_separation_constant(2, 9, 1) == 9);
  CHECK(radial_separation_constant(3, 100, 1) == 101);
  CHECK(radial_separation_constant(5, 100, 2) == 409);
  CHECK_THROWS_AS(radial_separation_constant(1, 100, 1), ConfigError);
}

namespace {

// -e^s sin(k sqrt(mu)/(n-2) (s + log(n-2))): the k-th radial mode.
double radial_mode(int n, double mu, int k, double s) {
  return -std::exp(s) * std::sin(k * std::sqrt(mu) / (n - 2) * (s + std::log(n - 2.0)));
}

}  // namespace

TEST_CASE("radial eigenfunction") {
  for (int n : {3, 4, 5}) {
    const double mu = 4;
    const auto [lo, hi] = radial_interval(n, mu);
    CHECK(std::abs(radial_eigenfunction(n, mu, hi)) <= 1e-15);
    CHECK(std::abs(radial_eigenfunction(n, mu, lo)) <= 1e-14);
    const double mid = 0.5 * (lo + hi);
    CHECK(radial_eigenfunction(n, mu, mid) > 0);
    for (int i = 1; i < 50; ++i) CHECK(radial_eigenfunction(n, mu, lo + (hi - lo) * i / 50.0) > 0);
    // f_ss - 2 f_s = -(kappa_1 / (n-2)^2) f by central differences.
    const double h = 1e-4;
    const double f = radial_eigenfunction(n, mu, mid);
    const double fp = (radial_eigenfunction(n, mu, mid + h) - radial_eigenfunction(n, mu, mid - h)) / (2 * h);
    const double fpp = (radial_eigenfunction(n, mu, mid + h) - 2 * f + radial_eigenfunction(n, mu, mid - h)) / (h * h);
    const double k1 = radial_separation_constant(n, mu, 1) / ((n - 2.0) * (n - 2.0));
    CHECK(std::abs(fpp - 2 * fp + k1 * f) <= 1e-6 * std::max(1.0, std::abs(k1 * f)));
    CHECK_THROWS_AS(radial_eigenfunction(n, mu, hi + 0.1), DomainError);
    CHECK_THROWS_AS(radial_eigenfunction(n, mu, lo - 0.1), DomainError);
  }
  CHECK_THROWS_AS(radial_eigenfunction(2, 4, 0.0), UnsupportedDimension);
}

TEST_CASE("second radial mode at n = 5, mu = 100 has constant 409") {
  const int n = 5;
  const double mu = 100;
  const auto [lo, hi] = radial_interval(n, mu);
  CHECK(std::abs(radial_mode(n, mu, 2, lo)) <= 1e-14);
  CHECK(std::abs(radial_mode(n, mu, 2, hi)) <= 1e-14);
  const double kappa = radial_separation_constant(n, mu, 2);
  const double h = 1e-5;
  for (int i = 1; i < 10; ++i) {
    const double s = lo + (hi - lo) * i / 10.0;
    const double f = radial_mode(n, mu, 2, s);
    const double fp = (radial_mode(n, mu, 2, s + h) - radial_mode(n, mu, 2, s - h)) / (2 * h);
    const double fpp = (radial_mode(n, mu, 2, s + h) - 2 * f + radial_mode(n, mu, 2, s - h)) / (h * h);
    CHECK(std::abs(fpp - 2 * fp + kappa / 9 * f) <= 1e-4 * (kappa / 9) * std::exp(s));
  }
}

TEST_CASE("alpha exponents") {
  CHECK(alpha_exponent(3, 2) == 1);
  CHECK(alpha_exponent(3, 3) == 0.5);
  CHECK(alpha_exponent(2, 2) == 0);
  CHECK(alpha_exponent(4, 3) == 1.5);
  CHECK(alpha_exponent(4, 4) == 1);
  CHECK_THROWS_AS(alpha_exponent(4, 1), ConfigError);
  CHECK_THROWS_AS(alpha_exponent(4, 5), ConfigError);
}

TEST_CASE("kappa step") {
  // n = 3, i = 2: alpha = 1 so kappa_2 is the eigenvalue itself.
  const ChainLevel l = kappa_step(101, 3, 2, pi / 4);
  CHECK(l.shift == 100);
  CHECK(l.kappa == eigenvalue_shooting({pi / 4, 100, WeightMode::Secant2}, 1, 1e-13));
  CHECK(l.bound_margin >= 0);

  // n = 4, mu = 1000, delta_2 = pi/4 against the finite-difference pencil.
  const double kappa1 = radial_separation_constant(4, 1e3, 1);
  const ChainLevel m = kappa_step(kappa1, 4, 2, pi / 4);
  const WeightedSLProblem p{pi / 4, kappa1 - 4, WeightMode::Secant2};
  const double oracle = solve_eigen_matrix(p, 1, default_matrix_intervals(p)).lambda + 2;
  CHECK(std::abs(m.kappa - oracle) / oracle <= 1e-8);
  CHECK(m.kappa - 2 >= std::cos(pi / 4) * std::cos(pi / 4) * (kappa1 - 4));
}

TEST_CASE("chain gap") {
  const KappaChain c = chain_gap(3, 1e3, {pi / 4}, pi / 3);
  CHECK(c.kappas.size() == 2);
  CHECK(c.kappas[0] == 1001);
  CHECK(c.alphas == std::vector<double>{1.0, 0.5});
  CHECK(c.final_shift == doctest::Approx(c.kappas[1] - 0.25).epsilon(1e-15));
  CHECK(c.bound_holds());
  CHECK(c.gap > 0);
  CHECK(c.lambda1 == doctest::Approx(eigenvalue_shooting({pi / 3, c.final_shift, WeightMode::Secant2}, 1, 1e-13) - 0.25).epsilon(1e-13));

  const KappaChain d = chain_gap(4, 1e3, {pi / 4, pi / 4}, pi / 3);
  CHECK(d.kappas.size() == 3);
  CHECK(d.levels.size() == 2);
  CHECK(d.bound_holds());
  CHECK(d.levels[1].shift == doctest::Approx(d.kappas[1] - 2.25).epsilon(1e-15));

  CHECK_THROWS_AS(chain_gap(3, 1e3, {}, pi / 3), ConfigError);
  CHECK_THROWS_AS(chain_gap(3, 1e3, {pi / 2}, pi / 3), ConfigError);
}

TEST_CASE("chain gap decreases and kappas grow along mu") {
  for (int n : {3, 4}) {
    const std::vector<double> deltas(static_cast<std::size_t>(n - 2), pi / 4);
    KappaChain prev = chain_gap(n, 1e2, deltas, pi / 3);
    for (double mu : {1e3, 1e4}) {
      const KappaChain c = chain_gap(n, mu, deltas, pi / 3);
      CHECK(c.gap < prev.gap);
      for (std::size_t j = 0; j < c.kappas.size(); ++j) CHECK(c.kappas[j] > prev.kappas[j]);
      CHECK(c.bound_holds());
      prev = c;
    }
  }
}

TEST_CASE("n = 2 reduction matches the planar analysis") {
  const double L = pi / 3;
  const KappaChain c = chain_gap(2, 1e3, {}, L);
  const GapReport g = analyze_gap({2, 1e3, L, {}}, L / 4);
  CHECK(std::abs(c.lambda1 - g.lambda1) / g.lambda1 <= 1e-8);
  CHECK(std::abs(c.lambda2 - g.lambda2) / g.lambda2 <= 1e-8);
  CHECK(c.levels.empty());
}
