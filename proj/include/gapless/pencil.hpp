#pragma once

// Second-order finite-difference pencil for -h'' + m h = Lambda w h with
// Dirichlet ends, scaled by step^2:
//
//   A' = tridiag(-1, 2 + m step^2, -1),   W' = step^2 diag(w(phi_i)).
//
// W' is positive, so by Sylvester's law the number of negative pivots of
// A' - sigma W' counts the eigenvalues below sigma.

#include <cstddef>
#include <vector>

#include "gapless/slcore.hpp"

namespace gapless {

struct Pencil {
  std::vector<double> interior;          // abscissae of the unknowns
  std::vector<long double> diagonal;     // 2 + m step^2
  std::vector<long double> mass;         // step^2 w_i
  double step = 0.0;

  static Pencil assemble(const WeightedSLProblem& p, std::size_t intervals);
  std::size_t size() const { return diagonal.size(); }
};

// Number of pencil eigenvalues strictly below sigma.
std::size_t sturm_count(const Pencil& pencil, long double sigma);

// Interval guaranteed to contain every pencil eigenvalue.
std::pair<double, double> pencil_bounds(const Pencil& pencil, double shift);

// k-th eigenvalue (1-based). Serial bisection is the reference; the parallel
// variant evaluates `points` Sturm counts per round under OpenMP.
double bisect_eigenvalue_serial(const Pencil& pencil, int k, double lo, double hi, double rel_tol);
double multisect_eigenvalue_parallel(const Pencil& pencil, int k, double lo, double hi,
                                     double rel_tol, int points = 0);

// Inverse iteration for the eigenvector at `lambda`, kept in the requested
// parity subspace (the grid is mirror symmetric).
std::vector<double> pencil_eigenvector(const Pencil& pencil, double lambda, Parity parity,
                                       int iterations = 3);

}  // namespace gapless
