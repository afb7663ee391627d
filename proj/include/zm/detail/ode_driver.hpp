#pragma once

// Adaptive Dormand-Prince 5(4) integration with dense output, evaluated on a
// caller-supplied grid. The state is carried in long double: solutions of the
// Coulomb equation grow exponentially under the barrier and the extra bits keep
// Wronskian and invariant diagnostics meaningful there.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "zm/errors.hpp"
#include "zm/sampling.hpp"

namespace zm::detail {

using OdeReal = long double;

template <std::size_t N>
using OdeState = std::array<OdeReal, N>;

inline constexpr std::size_t kMaxOdeSteps = 5'000'000;

struct NoStepCheck {
  template <class Time, class State>
  void operator()(const Time&, const State&) const {}
};

// Integrates x' = system(x, dxdt, t) from (t0, x0) and returns the state at
// each grid point, carrying the state in `Real`. The grid must be monotone in
// one direction away from t0 (points equal to t0 are allowed). `check(t, x)`
// runs after every accepted step and may throw to abort.
template <class Real, std::size_t N, class System, class Check = NoStepCheck>
std::vector<std::array<Real, N>> integrate_dense_as(System system, Real t0,
                                                    const std::array<Real, N>& x0,
                                                    std::span<const double> grid,
                                                    double tolerance, Check check = {}) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<Real, N>;
  using Stepper = odeint::runge_kutta_dopri5<State, Real, State, Real>;
  using std::fabs;
  using std::isfinite;

  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw ToleranceError("integrator: tolerance must be positive and finite");
  }
  std::vector<State> out(grid.size());
  if (grid.empty()) return out;

  const Real direction = (grid.back() >= t0) ? Real(1) : Real(-1);
  Real previous = t0;
  for (double g : grid) {
    if (!std::isfinite(g) || direction * (g - previous) < 0) {
      throw DomainError("integrator: output grid must be monotone away from the start point");
    }
    previous = g;
  }

  std::size_t next = 0;
  while (next < grid.size() && static_cast<Real>(grid[next]) == t0) {
    out[next++] = x0;
  }
  if (next == grid.size()) return out;

  const Real rel = tolerance;
  const Real abs = static_cast<Real>(tolerance) * static_cast<Real>(1e-3L);
  auto stepper = odeint::make_dense_output(abs, rel, Stepper());
  const Real span_length = fabs(static_cast<Real>(grid.back()) - t0);
  const Real scale = std::max<Real>(fabs(t0), static_cast<Real>(1e-3L) * span_length);
  stepper.initialize(x0, t0, direction * static_cast<Real>(1e-4L) * scale);

  std::size_t steps = 0;
  while (next < grid.size()) {
    while (next < grid.size() &&
           direction * (static_cast<Real>(grid[next]) - stepper.current_time()) <= 0) {
      stepper.calc_state(static_cast<Real>(grid[next]), out[next]);
      ++next;
    }
    if (next == grid.size()) break;

    if (++steps > kMaxOdeSteps) {
      throw ToleranceError("integrator: step budget exhausted before reaching the end point");
    }
    try {
      stepper.do_step(system);
    } catch (const odeint::odeint_error& e) {
      throw ToleranceError(std::string("integrator: tolerance not achievable (") + e.what() + ")");
    }
    const Real t = stepper.current_time();
    const Real dt = fabs(stepper.current_time_step());
    if (dt < static_cast<Real>(1e-16L) * std::max<Real>(fabs(t), Real(1))) {
      throw ToleranceError("integrator: step size underflow, tolerance not achievable");
    }
    for (const Real& v : stepper.current_state()) {
      if (!isfinite(v)) {
        throw ToleranceError("integrator: solution became non-finite");
      }
    }
    check(t, stepper.current_state());
  }
  return out;
}

template <std::size_t N, class System, class Check = NoStepCheck>
std::vector<OdeState<N>> integrate_dense(System system, OdeReal t0, const OdeState<N>& x0,
                                         std::span<const double> grid, double tolerance,
                                         Check check = {}) {
  return integrate_dense_as<OdeReal, N>(system, t0, x0, grid, tolerance, check);
}

}  // namespace zm::detail
