#include "zm/dynamics.hpp"

#include <cmath>

#include "zm/detail/ode_driver.hpp"
#include "zm/detail/potential.hpp"
#include "zm/errors.hpp"
#include "zm/sampling.hpp"

namespace zm {
namespace {

using detail::OdeReal;
using detail::OdeState;

template <class PotentialFn>
struct JointSystem {
  PotentialFn potential;
  OdeReal q_const;

  // x = (q, p, rho, rho')
  void operator()(const OdeState<4>& x, OdeState<4>& dxdt, OdeReal y) const {
    const OdeReal q_y = potential(y);
    const OdeReal rho = x[2];
    if (!(std::fabs(rho) >= kAmplitudeFloor)) {
      throw AmplitudeCollapseError("joint_flow: amplitude collapsed below 1e-8");
    }
    dxdt[0] = x[1];
    dxdt[1] = -q_y * x[0];
    dxdt[2] = x[3];
    dxdt[3] = -q_y * rho + q_const / (rho * rho * rho);
  }
};

void require_positive_time(double y, const char* fn) {
  if (!std::isfinite(y) || !(y > 0.0)) {
    throw DomainError(std::string(fn) + ": requires y > 0");
  }
}

template <class PotentialFn>
std::vector<JointSample> run_joint(const PhaseState& initial, const MilneSample& amplitude,
                                   PotentialFn potential, double q_const,
                                   std::span<const double> grid, double tolerance) {
  require_positive_time(initial.y, "joint_flow");
  if (initial.y != amplitude.y) {
    throw MismatchError("joint_flow: state and amplitude at different y");
  }
  if (!(amplitude.rho > 0.0)) throw DomainError("joint_flow: requires rho > 0");
  for (double y : grid) require_positive_time(y, "joint_flow");

  JointSystem<PotentialFn> system{std::move(potential), q_const};
  const auto states = detail::integrate_dense<4>(
      system, initial.y, {initial.q, initial.p, amplitude.rho, amplitude.drho}, grid,
      tolerance);

  std::vector<JointSample> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& x = states[i];
    const double rho = static_cast<double>(x[2]);
    out.push_back({{grid[i], static_cast<double>(x[0]), static_cast<double>(x[1])},
                   {grid[i], rho, static_cast<double>(x[3]), 1.0 / (rho * rho)}});
  }
  return out;
}

}  // namespace

std::vector<PhaseState> hamiltonian_flow(const PhaseState& initial, const CoulombParams& params,
                                         double y_end, const FlowOptions& options) {
  require_positive_time(initial.y, "hamiltonian_flow");
  if (!std::isfinite(y_end) || !(y_end > initial.y)) {
    throw DomainError("hamiltonian_flow: requires y_end > initial.y");
  }
  if (options.samples < 2) throw DomainError("hamiltonian_flow: at least two samples required");
  const std::vector<double> grid = linspace(initial.y, y_end, options.samples);
  return hamiltonian_flow(initial, params, grid, options.tolerance);
}

std::vector<PhaseState> hamiltonian_flow(const PhaseState& initial, const CoulombParams& params,
                                         std::span<const double> grid, double tolerance) {
  require_positive_time(initial.y, "hamiltonian_flow");
  const std::vector<WaveSample> waves =
      propagate_wave(params, {initial.y, initial.q, initial.p}, grid, tolerance);
  std::vector<PhaseState> out;
  out.reserve(waves.size());
  for (const WaveSample& w : waves) out.push_back({w.y, w.phi, w.dphi});
  return out;
}

double ermakov_lewis_invariant(const PhaseState& state, const MilneSample& amp, double q_const) {
  if (state.y != amp.y) {
    throw MismatchError("ermakov_lewis_invariant: state and amplitude at different y");
  }
  if (!(amp.rho > 0.0)) throw DomainError("ermakov_lewis_invariant: requires rho > 0");
  const double ratio = state.q / amp.rho;
  const double mixed = amp.rho * state.p - amp.drho * state.q;
  return 0.5 * (q_const * ratio * ratio + mixed * mixed);
}

double instantaneous_energy(const PhaseState& state, const CoulombParams& params) {
  return 0.5 * state.p * state.p +
         0.5 * effective_potential(state.y, params) * state.q * state.q;
}

std::vector<JointSample> joint_flow(const PhaseState& initial, const MilneSample& amplitude,
                                    const CoulombParams& params, double q_const,
                                    std::span<const double> grid, double tolerance) {
  params.validate();
  auto potential = [params](OdeReal y) { return detail::coulomb_potential(y, params); };
  return run_joint(initial, amplitude, potential, q_const, grid, tolerance);
}

std::vector<JointSample> joint_flow(const PhaseState& initial, const MilneSample& amplitude,
                                    const Potential& potential, double q_const,
                                    std::span<const double> grid, double tolerance) {
  if (!potential) throw DomainError("joint_flow: empty potential");
  auto wrapped = [&potential](OdeReal y) {
    return static_cast<OdeReal>(potential(static_cast<double>(y)));
  };
  return run_joint(initial, amplitude, wrapped, q_const, grid, tolerance);
}

}  // namespace zm
