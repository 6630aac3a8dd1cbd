#pragma once

// Scaled Pruefer integration of h'' + (Lambda w - m) h = 0 from phi = 0
// outward. With h = rho sin(theta), h' = S rho cos(theta):
//
//   theta'   = S cos^2(theta) + (q / S) sin^2(theta),   q = Lambda w - m
//   log rho' = (S - q / S) sin(theta) cos(theta)
//
// The phase is bounded and counts zeros; log rho carries the amplitude so the
// exp(+-sqrt(m)) growth through the central barrier never overflows.

#include <array>
#include <span>
#include <vector>

#include "gapless/slcore.hpp"

namespace gapless::detail {

struct PruferState {
  double theta = 0.0;
  double log_rho = 0.0;
};

class PruferIntegrator {
 public:
  PruferIntegrator(const WeightedSLProblem& problem, double lambda, const SolverConfig& config);

  double scale() const { return scale_; }
  PruferState initial(Parity parity) const;

  // State at phi = end (0 <= end <= a).
  PruferState shoot(Parity parity, double end) const;

  // States at each of the nondecreasing abscissae ts (all >= 0).
  std::vector<PruferState> trace(Parity parity, std::span<const double> ts) const;

 private:
  WeightedSLProblem problem_;
  double lambda_;
  double scale_;
  double abs_tol_;
  double rel_tol_;
  double max_dt_;
};

double prufer_scale(const WeightedSLProblem& problem);

// theta(a) target for the k-th eigenvalue of the parity half-problem.
double phase_target(int k);

}  // namespace gapless::detail
