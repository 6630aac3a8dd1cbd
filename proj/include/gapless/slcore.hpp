#pragma once

// Weighted Sturm-Liouville eigenproblem
//
//     h'' + (Lambda w(phi) - m) h = 0   on (-a, a),   h(-a) = h(a) = 0,
//
// with w = sec^2 (the separated angular equation of the strip domains) or
// w = 1 (closed-form oracle). Two independent solvers are provided: Pruefer
// shooting on the parity half-problems, and bisection on the finite
// difference pencil. Eigenfunction samples are extended-range (Real).

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapless/numeric.hpp"

namespace gapless {

enum class WeightMode { Secant2, Unit };
enum class Parity { Even, Odd };

inline constexpr double kSecantMargin = 1e-3;

double weight_value(WeightMode mode, double phi);

struct WeightedSLProblem {
  double half_width = 1.0;  // a
  double shift = 0.0;       // m
  WeightMode weight = WeightMode::Secant2;

  void validate() const;
  double w(double phi) const;
};

// Parity of the k-th eigenfunction of an even problem.
constexpr Parity parity_of_index(int k) { return k % 2 == 1 ? Parity::Even : Parity::Odd; }

struct SolverConfig {
  double rel_tol = 1e-13;         // bisection width on Lambda, relative
  double ode_tol = 1e-12;         // per-step abs/rel tolerance of the integrator
  double min_steps_per_sqrt_m = 32.0;
  std::size_t grid_min = 4096;    // sample grid intervals on [-a, a]
  double grid_per_sqrt_m = 64.0;
  std::size_t inner_points = 1024;
  int max_index = 4;
  int max_bracket_expansions = 60;
  double shift_cap = 1e6;         // largest m accepted (precision budget)

  void validate() const;
  // max(grid_min, ceil(grid_per_sqrt_m * sqrt(|m|))) rounded up to a multiple of 4.
  std::size_t grid_intervals(double shift) const;
};

struct EigenSolution {
  int index = 1;
  double lambda = 0.0;
  Parity parity = Parity::Even;
  std::vector<double> grid;  // N+1 points, uniform on [-a, a]
  std::vector<Real> values;
  std::vector<Real> derivs;  // empty when the producer has no derivative
  std::vector<std::string> warnings;

  double step() const { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }
};

struct PointSample {
  Real value = 0;
  Real deriv = 0;
};

// Normalized eigenfunction at a known eigenvalue, evaluable anywhere in
// [-a, a]. Integration always runs from 0 outward (the stable direction
// through the central barrier) and parity supplies the other half.
// Normalization: Simpson estimate of the weighted L2 norm on the config grid
// equals 1; sign: positive on the lobe nearest -a.
class Eigenfunction {
 public:
  Eigenfunction(const WeightedSLProblem& problem, double lambda, Parity parity,
                const SolverConfig& config = {});

  const WeightedSLProblem& problem() const { return problem_; }
  double lambda() const { return lambda_; }
  Parity parity() const { return parity_; }

  std::vector<PointSample> sample(std::span<const double> phis) const;
  PointSample at(double phi) const;

  // Uniform-grid samples with endpoints forced to exactly zero.
  EigenSolution on_grid(std::size_t intervals, int index) const;

  // Relative mismatch h(a)/max|h| before the endpoint is forced to zero.
  double end_mismatch() const { return end_mismatch_; }

 private:
  WeightedSLProblem problem_;
  double lambda_;
  Parity parity_;
  SolverConfig config_;
  double scale_;        // Pruefer scale factor S
  long double log_norm_ = 0;
  int sign_ = 1;
  double end_mismatch_ = 0.0;
};

// Lowest-two solve with the fundamental gap obtained cancellation-free from
// the Wronskian identity of the two parity half-problems:
//   Lambda_2 - Lambda_1 = h1(0) h2'(0) / int_0^a w h1 h2 dphi.
struct LowestPair {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Real gap = 0;
  std::shared_ptr<const Eigenfunction> first;
  std::shared_ptr<const Eigenfunction> second;
  EigenSolution first_samples;
  EigenSolution second_samples;
};

// Pruefer-phase shooting with bisection on Lambda.
double eigenvalue_shooting(const WeightedSLProblem& p, int k, double rel_tol,
                           const SolverConfig& config = {});
EigenSolution solve_eigen_shooting(const WeightedSLProblem& p, int k, double rel_tol,
                                   const SolverConfig& config = {});
LowestPair solve_lowest_pair(const WeightedSLProblem& p, const SolverConfig& config = {});

// Finite-difference pencil (A - Lambda W) on `intervals` uniform intervals
// (intervals - 1 unknowns), eigenvalue by Sturm bisection. With Richardson
// extrapolation the pencil is also solved on 2*intervals and combined.
struct MatrixOptions {
  bool richardson = true;
  bool parallel = false;  // OpenMP multisection instead of serial bisection
  double rel_tol = 1e-14;
};

EigenSolution solve_eigen_matrix(const WeightedSLProblem& p, int k, std::size_t intervals,
                                 const MatrixOptions& options = {});

// Power-of-two interval count adequate for the pencil at this shift.
std::size_t default_matrix_intervals(const WeightedSLProblem& p);

// Sample the eigenfunction at `lambda`, picking the parity whose shot lands on
// the far Dirichlet condition. Throws NotAnEigenvalue when the grid residual
// exceeds 1e-6 (scaled).
EigenSolution eigenfunction_samples(const WeightedSLProblem& p, double lambda,
                                    std::size_t intervals, const SolverConfig& config = {});

// Scaled residual max|D2 h + (Lambda w - m) h| / (max|h| (1 + max|Lambda w - m|))
// using the fourth-order (Numerov) form of the second difference.
double grid_residual(const WeightedSLProblem& p, double lambda, std::span<const double> grid,
                     std::span<const Real> values);

// R[h] = (int h'^2 + m h^2) / (int w h^2). Uses `derivs` when non-empty,
// otherwise fourth-order central differences.
Real rayleigh_quotient(std::span<const double> grid, std::span<const Real> values,
                       std::span<const Real> derivs, double shift, WeightMode weight);
Real rayleigh_quotient(const EigenSolution& s, double shift, WeightMode weight);

// lo <= Lambda_1 <= hi. Unit mode returns the exact value twice.
std::pair<double, double> bracket_lambda1(const WeightedSLProblem& p);

// Min-max bracket for Lambda_k valid for any shift (used to seed bisection).
std::pair<double, double> bracket_lambda(const WeightedSLProblem& p, int k);

// Zero count on the open interval, ignoring exact-zero samples at endpoints.
int interior_zero_count(std::span<const Real> values);

}  // namespace gapless
