#include <doctest.h>

#include <cmath>
#include <random>

#include "gapless/error.hpp"
#include "gapless/geometry.hpp"
#include "gapless/numeric.hpp"

using namespace gapless;

TEST_CASE("vertical geodesic and identity") {
  CHECK(hyperbolic_distance({0, 1}, {0, std::exp(1.0)}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hyperbolic_distance({0.3, 2}, {0.3, 2}) == 0.0);
}

TEST_CASE("S to P at L = pi/4 is arcosh 3") {
  const double L = pi / 4;
  const double d = hyperbolic_distance({-std::sin(L), std::cos(L)}, {std::sin(L), std::cos(L)});
  CHECK(d == doctest::Approx(std::acosh(3.0)).epsilon(1e-14));
  CHECK(d == doctest::Approx(1.762747174039086).epsilon(1e-14));
}

TEST_CASE("non-positive y is rejected") {
  CHECK_THROWS_AS(hyperbolic_distance({0, 0}, {0, 1}), DomainError);
  CHECK_THROWS_AS(hyperbolic_distance({0, 1}, {1, -2}), DomainError);
}

TEST_CASE("distance is symmetric and non-negative") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-4, 4), uy(0.01, 5);
  for (int i = 0; i < 200; ++i) {
    HalfPlanePoint p{ux(rng), uy(rng)}, q{ux(rng), uy(rng)};
    CHECK(hyperbolic_distance(p, q) == hyperbolic_distance(q, p));
    CHECK(hyperbolic_distance(p, q) > 0);
  }
}

TEST_CASE("triangle inequality on 1000 random triples") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> ux(-5, 5), ly(-3, 3);
  double worst = 1e300;
  for (int i = 0; i < 1000; ++i) {
    HalfPlanePoint p{ux(rng), std::exp(ly(rng))}, q{ux(rng), std::exp(ly(rng))},
        r{ux(rng), std::exp(ly(rng))};
    worst = std::min(worst, hyperbolic_distance(p, q) + hyperbolic_distance(q, r) -
                                hyperbolic_distance(p, r));
  }
  CHECK(worst >= -1e-12);
}

TEST_CASE("polar round trip") {
  for (double mu : {4.0, 100.0, 1e6})
    for (double phi : {-1.5, -0.7, 0.0, 0.3, 1.55}) {
      const double e = std::exp(pi / std::sqrt(mu));
      for (double r : {1.0, 0.5 * (1 + e), e}) {
        const auto back = to_polar(from_polar(r, phi));
        CHECK(std::abs(back[0] - r) <= 1e-12);
        CHECK(std::abs(back[1] - phi) <= 1e-12);
      }
    }
}

TEST_CASE("corner points") {
  const StripDomain d{2, 4.0, pi / 6, {}};
  const CornerPoints c = corner_points(d);
  CHECK(c.T.x == 0.0);
  CHECK(c.T.y == 1.0);
  CHECK(c.U.x == 0.0);
  CHECK(c.U.y == doctest::Approx(std::exp(pi / 2)).epsilon(1e-15));
  CHECK(hyperbolic_distance(c.P, c.Q) == doctest::Approx(hyperbolic_distance(c.R, c.S)).epsilon(1e-14));
  CHECK_THROWS_AS(corner_points(StripDomain{3, 4.0, pi / 6, {pi / 4}}), UnsupportedDimension);
}

TEST_CASE("diameter: closed form, bounds and the P-R pair") {
  // Frozen from a 30-digit evaluation of the closed form.
  CHECK(diameter({2, 1e6, pi / 4, {}}) == doctest::Approx(1.7627506634675984).epsilon(1e-14));
  CHECK(diameter({2, 100, pi / 3, {}}) == doctest::Approx(2.6622330886191846).epsilon(1e-14));

  for (double L : {0.05, pi / 6, pi / 4, pi / 3, 1.2, 1.5})
    for (double mu : {1.0, 10.0, 100.0, 1e4, 1e6}) {
      const StripDomain d{2, mu, L, {}};
      const double D = diameter(d);
      const DiameterBounds b = diameter_bounds(d);
      CHECK(D >= b.lower - 1e-12);
      CHECK(D <= b.upper + 1e-12);
      const CornerPoints c = corner_points(d);
      const double pq = hyperbolic_distance(c.P, c.Q), pr = hyperbolic_distance(c.P, c.R),
                   rs = hyperbolic_distance(c.R, c.S);
      CHECK(D == doctest::Approx(pr).epsilon(1e-13));
      CHECK(D >= std::max(pq, rs) - 1e-12);
      const NeckCheck n = neck_check(d);
      CHECK(pr >= rs - 1e-12);
      const double sh = std::sinh(pi / (2 * std::sqrt(mu))) / std::cos(L);
      CHECK(n.dist_RS == doctest::Approx(std::acosh(2 * sh * sh + 1)).epsilon(1e-12));
      // The ratio dist(R,S) >= dist(T,U) / cos L never holds for L > 0: the
      // side R-S is shorter than its arclength along the ray.
      CHECK(n.dist_RS < n.dist_TU / std::cos(L));
      CHECK(n.ratio_ok == (n.dist_RS >= n.dist_TU / std::cos(L) - 1e-12 * std::max(1.0, n.dist_TU / std::cos(L))));
    }
  CHECK_THROWS_AS(diameter({3, 10, 1.0, {0.5}}), UnsupportedDimension);
}

TEST_CASE("neck") {
  const NeckCheck n = neck_check({2, pi * pi, pi / 4, {}});
  CHECK(n.dist_TU == doctest::Approx(1.0).epsilon(1e-15));
  // L -> 0: the two radial sides collapse onto T-U.
  const NeckCheck thin = neck_check({2, 100.0, 1e-8, {}});
  CHECK(std::abs(thin.dist_RS - thin.dist_TU) <= 1e-6);
  CHECK(thin.dist_RS == doctest::Approx(0.31415926535897934).epsilon(1e-13));
  CHECK(thin.ratio_ok);

  // mpmath, 40 digits
  struct Row { double mu, L, rs; };
  for (const Row& r : {Row{10, 1.5, 5.3753031717802965}, Row{100, pi / 3, 0.62088451475142751},
                       Row{1e4, pi / 4, 0.044427002702301351}, Row{1e6, 1.2, 0.0086698409720740942},
                       Row{1, 0.05, 3.1438867180922915}}) {
    const NeckCheck k = neck_check({2, r.mu, r.L, {}});
    CHECK(k.dist_RS == doctest::Approx(r.rs).epsilon(1e-12));
    CHECK_FALSE(k.ratio_ok);
  }
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(StripDomain({2, 1.0, pi / 2, {}}).validate(), ConfigError);
  CHECK_THROWS_AS(StripDomain({2, -1.0, 1.0, {}}).validate(), ConfigError);
  CHECK_THROWS_AS(StripDomain({3, 1.0, 1.0, {}}).validate(), ConfigError);
  CHECK_NOTHROW(StripDomain({4, 1.0, 1.0, {0.5, 0.7}}).validate());
}
