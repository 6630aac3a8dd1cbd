#pragma once

#include <array>
#include <vector>

namespace gapless {

struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;
};

// Omega_{sqrt(mu), delta_2..delta_{n-1}, L}: radial extent [1, exp(pi/sqrt(mu))],
// last angle within L of the axis, intermediate angles within delta_i.
struct StripDomain {
  int n = 2;
  double mu = 1.0;
  double L = 1.0;
  std::vector<double> deltas;

  // Throws ConfigError when an invariant is violated.
  void validate() const;
  double outer_radius() const;  // exp(pi / sqrt(mu))
};

struct CornerPoints {
  HalfPlanePoint P, Q, R, S, T, U;
};

struct NeckCheck {
  double dist_RS = 0.0;
  double dist_TU = 0.0;
  bool ratio_ok = false;
};

struct DiameterBounds {
  double lower = 0.0;  // arcosh(1 + 2 tan^2 L)
  double upper = 0.0;  // lower + pi / sqrt(mu)
};

// Half-plane distance; throws DomainError for y <= 0.
double hyperbolic_distance(const HalfPlanePoint& p, const HalfPlanePoint& q);

// (r, phi) with x = r sin(phi), y = r cos(phi).
HalfPlanePoint from_polar(double r, double phi);
std::array<double, 2> to_polar(const HalfPlanePoint& p);

// The following require d.n == 2 (UnsupportedDimension otherwise).
CornerPoints corner_points(const StripDomain& d);
double diameter(const StripDomain& d);
DiameterBounds diameter_bounds(const StripDomain& d);
NeckCheck neck_check(const StripDomain& d);

}  // namespace gapless
