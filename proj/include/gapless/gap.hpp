#pragma once

// Fundamental gap of the two-dimensional strip family: the gap itself, the
// odd test function psi with the A/B/C/D split of R[psi h1] - R[h1], and the
// shape diagnostics of h1 (double peak, inflection, cosh envelopes).

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gapless/geometry.hpp"
#include "gapless/slcore.hpp"

namespace gapless {

struct RayleighTerms {
  Real A = 0;  // int (h^2 - (psi h)^2) w      over [-phi1, phi1]
  Real B = 0;  // int ((psi h)'^2 - h'^2)
  Real C = 0;  // mu int ((psi h)^2 - h^2)
  Real D = 0;  // lambda1 A

  // R[psi h] - R[h] for a normalized eigenfunction h.
  Real upper() const { return (B + C + D) / (1 - A); }
};

struct ShapeReport {
  Real h1_at_0 = 0;
  Real h1_max = 0;
  double max_location = 0.0;      // right maximum
  double inflection_point = 0.0;  // right inflection, from the discrete second difference
  double inflection_residual = 0.0;  // |cos^2(phi_IP) - lambda1/mu|
  double phi0 = 0.0;
  double phi1 = 0.0;  // phi0 / mu
  double c1 = 0.0;    // 1 - (cos 2phi0 / cos phi0)^2
  double b_bound = 0.0;
  Real mass_center = 0;  // mu^2 int_{-phi1}^{phi1} h1^2
  Real deriv_mass = 0;   // int_{-phi1}^{phi1} h1'^2
  Real central_mass = 0;  // int_{-phi0}^{phi0} h1^2 sec^2

  double evenness = 0.0;  // max |h(phi) - h(-phi)| / h1_max on the grid
  bool positive = false;
  bool envelope_upper_ok = false;  // h <= h(0) cosh(sqrt(mu) sin L phi) on (-phi0, phi0)
  bool envelope_lower_ok = false;  // h >= h(0) cosh(sqrt(mu c1) phi) on (-phi0, phi0)
  bool envelopes_ok = false;
  bool h0_bound_ok = false;        // h(0)^2 <= 4 b exp(-sqrt(mu c1) phi0 / 2)
  bool integral_bound_ok = false;  // central_mass < b
  Real h0_bound_rhs = 0;
};

struct GapReport {
  double mu = 0.0;
  double L = 0.0;
  double phi0 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Real gap = 0;  // Wronskian value; lambda2 - lambda1 in double may round to 0
  double diameter = 0.0;
  Real d2gap = 0;
  Real rayleigh_upper = 0;   // direct R[psi h1] - R[h1]
  Real rayleigh_split = 0;   // (B + C + D) / (1 - A)
  RayleighTerms terms;
  ShapeReport shape;
  std::vector<std::string> warnings;
};

// Default phi0 when none is given.
inline double default_phi0(double L) { return L / 4; }

// psi = 1 on [-L, -phi1], -phi/phi1 on [-phi1, phi1], -1 on [phi1, L].
double psi_value(double phi, double phi1);
double psi_slope(double phi, double phi1);
std::vector<double> test_function_psi(double phi0, double mu, std::span<const double> grid,
                                      double L);

// A, B, C, D by Simpson over `intervals` uniform intervals on [-phi1, phi1],
// with h and h' evaluated exactly from the eigenfunction.
RayleighTerms rayleigh_difference_terms(const Eigenfunction& h1, double phi1, double mu,
                                        double lambda1, std::size_t intervals = 1024);

// Same quantities from sampled data; psi and psi' given on the same grid.
// The inner interval must hold at least 64 grid intervals (ResolutionError
// otherwise).
RayleighTerms rayleigh_difference_terms(const EigenSolution& h1, std::span<const double> psi,
                                        std::span<const double> dpsi, double phi1, double mu,
                                        double lambda1);

// R[psi h1] - R[h1] from the two full quotients, evaluated in multiprecision
// on a composite grid with breakpoints at +-phi1.
Real direct_rayleigh_difference(const Eigenfunction& h1, double phi1, double mu,
                                std::size_t outer_intervals, std::size_t inner_intervals = 2048);

ShapeReport shape_report(const EigenSolution& h1, const Eigenfunction& f, double mu,
                         double lambda1, double phi0, std::size_t inner_intervals = 1024);

struct IntegralBounds {
  Real central_mass = 0;
  double b_bound = 0.0;
  bool bound_ok = false;
  Real mass_center = 0;
  Real deriv_mass = 0;
};
IntegralBounds integral_bound_check(const EigenSolution& h1, const Eigenfunction& f, double mu,
                                    double lambda1, double phi0, std::size_t inner_intervals = 1024);

GapReport analyze_gap(const StripDomain& d, double phi0, const SolverConfig& config = {});

// Sweep-level summaries. A threshold is the smallest swept mu from which a
// property holds at every later point; infinity when it never settles.
inline constexpr double kNoThreshold = std::numeric_limits<double>::infinity();
double locate_threshold(std::span<const double> mus, const std::vector<bool>& holds);

template <class T, class Key>
bool strictly_decreasing(const std::vector<T>& xs, Key key) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(key(xs[i]) < key(xs[i - 1]))) return false;
  return true;
}

struct SweepSummary {
  bool d2gap_decreasing = false;
  bool d2gap_below_3pi2 = false;
  Real d2gap_ratio = 0;  // last / first
  bool ratio_decreasing = false;  // lambda1 / mu
  bool ratio_above_cos2 = false;
  double excess_ratio = 0.0;      // (lambda1/mu - cos^2 L) last over first
  double bracket_threshold = kNoThreshold;  // lambda1 <= mu cos^2(L/2)
  bool bracket_lower_ok = false;
  bool gap_est_ok = false;
  double worst_split_rel = 0.0;
  bool max_location_increasing = false;
  bool h_ratio_decreasing = false;
  double envelope_lower_threshold = kNoThreshold;
  double h0_bound_threshold = kNoThreshold;
  bool envelope_upper_all = false;
  bool integral_bound_all = false;
  bool mass_center_decreasing = false;
  bool deriv_mass_decreasing = false;
  bool terms_decreasing = false;
  double worst_inflection = 0.0;
  double worst_evenness = 0.0;
  bool positive_all = false;
};

SweepSummary summarize_sweep(const std::vector<GapReport>& reports);

}  // namespace gapless
