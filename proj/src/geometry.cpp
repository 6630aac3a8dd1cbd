#include "gapless/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapless/error.hpp"
#include "gapless/numeric.hpp"

namespace gapless {

namespace {

// arcosh(1 + x) for x >= 0 without cancellation near zero distance.
double arcosh_one_plus(double x) {
  x = std::max(x, 0.0);
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

void require_planar(const StripDomain& d, const char* what) {
  if (d.n != 2)
    throw UnsupportedDimension(std::string(what) + ": only defined for n = 2 (got n = " +
                               std::to_string(d.n) + ")");
}

}  // namespace

void StripDomain::validate() const {
  if (n < 2) throw ConfigError("StripDomain: n must be >= 2");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ConfigError("StripDomain: mu must be > 0");
  if (!(L > 0.0 && L < pi / 2)) throw ConfigError("StripDomain: L must lie in (0, pi/2)");
  if (deltas.size() != static_cast<std::size_t>(n - 2))
    throw ConfigError("StripDomain: expected " + std::to_string(n - 2) + " deltas, got " +
                      std::to_string(deltas.size()));
  for (double d : deltas)
    if (!(d > 0.0 && d < pi / 2)) throw ConfigError("StripDomain: every delta must lie in (0, pi/2)");
}

double StripDomain::outer_radius() const { return std::exp(pi / std::sqrt(mu)); }

double hyperbolic_distance(const HalfPlanePoint& p, const HalfPlanePoint& q) {
  if (!(p.y > 0.0) || !(q.y > 0.0))
    throw DomainError("hyperbolic_distance: points must have y > 0");
  // ((x1^2 + y1^2) + (x2^2 + y2^2) - 2 x1 x2) / (2 y1 y2) rewritten as
  // 1 + |p - q|^2 / (2 y1 y2); the excess over 1 is clamped at 0.
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return arcosh_one_plus((dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

HalfPlanePoint from_polar(double r, double phi) { return {r * std::sin(phi), r * std::cos(phi)}; }

std::array<double, 2> to_polar(const HalfPlanePoint& p) {
  return {std::hypot(p.x, p.y), std::atan2(p.x, p.y)};
}

CornerPoints corner_points(const StripDomain& d) {
  require_planar(d, "corner_points");
  d.validate();
  const double s = std::sin(d.L), c = std::cos(d.L), e = d.outer_radius();
  return {
      .P = {s, c},
      .Q = {e * s, e * c},
      .R = {-e * s, e * c},
      .S = {-s, c},
      .T = {0.0, 1.0},
      .U = {0.0, e},
  };
}

double diameter(const StripDomain& d) {
  require_planar(d, "diameter");
  d.validate();
  // dist(P, R) = arcosh((1 + e^2t + 2 e^t sin^2 L) / (2 e^t cos^2 L)), t = pi/sqrt(mu),
  // written as arcosh(1 + x) with x = (2 sinh^2(t/2) + 2 sin^2 L) / cos^2 L.
  const double t = pi / std::sqrt(d.mu);
  const double sh = std::sinh(t / 2.0);
  const double s = std::sin(d.L), c = std::cos(d.L);
  return arcosh_one_plus((2.0 * sh * sh + 2.0 * s * s) / (c * c));
}

DiameterBounds diameter_bounds(const StripDomain& d) {
  require_planar(d, "diameter_bounds");
  d.validate();
  const double tn = std::tan(d.L);
  const double lower = arcosh_one_plus(2.0 * tn * tn);
  return {lower, lower + pi / std::sqrt(d.mu)};
}

NeckCheck neck_check(const StripDomain& d) {
  require_planar(d, "neck_check");
  const CornerPoints c = corner_points(d);
  NeckCheck out;
  out.dist_RS = hyperbolic_distance(c.R, c.S);
  out.dist_TU = hyperbolic_distance(c.T, c.U);  // = pi / sqrt(mu)
  const double needed = out.dist_TU / std::cos(d.L);
  out.ratio_ok = out.dist_RS >= needed - 1e-12 * std::max(1.0, needed);
  return out;
}

}  // namespace gapless
