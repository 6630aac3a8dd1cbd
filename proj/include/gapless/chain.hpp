#pragma once

// Dimension n >= 3: the radial factor in closed form and the chain of
// weighted angular problems
//
//   h'' + (kappa_i - alpha_i (alpha_i - 1)) sec^2(phi) h = (kappa_{i-1} - alpha_i^2) h
//
// on (-delta_i, delta_i), ending with the last angle on (-L, L).

#include <vector>

#include "gapless/slcore.hpp"

namespace gapless {

struct ChainLevel {
  int i = 2;
  double alpha = 0.0;
  double shift = 0.0;  // kappa_{i-1} - alpha_i^2
  double delta = 0.0;
  double kappa = 0.0;  // Lambda_1 + alpha_i (alpha_i - 1)
  double bound_margin = 0.0;  // (kappa_i - alpha_i(alpha_i-1)) - cos^2(delta_i) shift
};

struct KappaChain {
  int n = 3;
  double mu = 0.0;
  std::vector<double> deltas;
  double L = 0.0;
  std::vector<double> kappas;  // kappa_1 .. kappa_{n-1}
  std::vector<double> alphas;  // alpha_2 .. alpha_n
  std::vector<ChainLevel> levels;
  double final_shift = 0.0;  // kappa_{n-1} - alpha_n^2
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Real gap = 0;  // Lambda_2 - Lambda_1 of the final problem

  bool bound_holds() const;
};

// k^2 mu for n = 2, (n-2)^2 + k^2 mu otherwise.
double radial_separation_constant(int n, double mu, int k = 1);

// f(s) = -e^s sin(sqrt(mu)/(n-2) (s + log(n-2))) on
// [-(n-2) pi / sqrt(mu) - log(n-2), -log(n-2)].
double radial_eigenfunction(int n, double mu, double s);
std::pair<double, double> radial_interval(int n, double mu);

// n - 1 - i/2 for 2 <= i < n, n/2 - 1 for i = n.
double alpha_exponent(int n, int i);

ChainLevel kappa_step(double kappa_prev, int n, int i, double delta_i,
                      const SolverConfig& config = {});

// Accepts n = 2 as the degenerate chain (no intermediate level, alpha_2 = 0).
KappaChain chain_gap(int n, double mu, const std::vector<double>& deltas, double L,
                     const SolverConfig& config = {});

}  // namespace gapless
