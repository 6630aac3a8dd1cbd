#include "prufer.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace gapless::detail {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

double prufer_scale(const WeightedSLProblem& problem) {
  return std::sqrt(std::max(1.0, std::abs(problem.shift)));
}

double phase_target(int k) {
  // Even index-k solution has (k-1)/2 zeros in (0, a), odd has k/2 - 1;
  // theta starts in [0, pi/2] and must land on the next multiple of pi.
  const int zeros = k % 2 == 1 ? (k - 1) / 2 : k / 2 - 1;
  return (zeros + 1) * pi;
}

PruferIntegrator::PruferIntegrator(const WeightedSLProblem& problem, double lambda,
                                   const SolverConfig& config)
    : problem_(problem),
      lambda_(lambda),
      scale_(prufer_scale(problem)),
      abs_tol_(config.ode_tol),
      rel_tol_(config.ode_tol),
      max_dt_(problem.half_width /
              (config.min_steps_per_sqrt_m * std::sqrt(std::max(1.0, std::abs(problem.shift))))) {}

PruferState PruferIntegrator::initial(Parity parity) const {
  if (parity == Parity::Even) return {pi / 2, 0.0};       // h(0) = 1, h'(0) = 0
  return {0.0, -std::log(scale_)};                         // h(0) = 0, h'(0) = 1
}

namespace {

struct Rhs {
  const WeightedSLProblem* problem;
  double lambda;
  double scale;

  void operator()(const State& x, State& dxdt, double phi) const {
    const double q = lambda * problem->w(phi) - problem->shift;
    const double s = std::sin(x[0]), c = std::cos(x[0]);
    dxdt[0] = scale * c * c + (q / scale) * s * s;
    dxdt[1] = (scale - q / scale) * s * c;
  }
};

}  // namespace

PruferState PruferIntegrator::shoot(Parity parity, double end) const {
  const PruferState init = initial(parity);
  State x{init.theta, init.log_rho};
  if (end <= 0.0) return init;
  auto stepper = odeint::make_controlled(abs_tol_, rel_tol_, max_dt_,
                                         odeint::runge_kutta_dopri5<State>());
  odeint::integrate_adaptive(stepper, Rhs{&problem_, lambda_, scale_}, x, 0.0, end,
                             std::min(max_dt_, end) / 4);
  return {x[0], x[1]};
}

std::vector<PruferState> PruferIntegrator::trace(Parity parity,
                                                 std::span<const double> ts) const {
  std::vector<PruferState> out;
  out.reserve(ts.size());
  if (ts.empty()) return out;

  const PruferState init = initial(parity);
  State x{init.theta, init.log_rho};

  // integrate_times wants the start time first; observe only requested points.
  std::vector<double> times;
  times.reserve(ts.size() + 1);
  const bool prepend = ts.front() > 0.0;
  if (prepend) times.push_back(0.0);
  times.insert(times.end(), ts.begin(), ts.end());
  if (times.size() == 1) {
    out.push_back(init);
    return out;
  }

  auto stepper = odeint::make_controlled(abs_tol_, rel_tol_, max_dt_,
                                         odeint::runge_kutta_dopri5<State>());
  std::size_t seen = 0;
  auto observer = [&](const State& s, double) {
    if (prepend && seen++ == 0) return;
    out.push_back({s[0], s[1]});
  };
  const double dt = std::min(max_dt_, std::max(times.back() - times.front(), 1e-300)) / 4;
  odeint::integrate_times(stepper, Rhs{&problem_, lambda_, scale_}, x, times.begin(), times.end(),
                          dt, observer);
  return out;
}

}  // namespace gapless::detail
