#pragma once

// The Coulomb equation read as a unit-mass oscillator with y as time:
//   dq/dy = p,   dp/dy = -Q(y) q.
// Q depends on y, so the oscillator energy is not conserved; the
// Ermakov-Lewis invariant built from a Pinney amplitude is.

#include <cstddef>
#include <span>
#include <vector>

#include "zm/coulomb_wave.hpp"
#include "zm/milne.hpp"

namespace zm {

struct PhaseState {
  double y;  // Hamiltonian time
  double q;  // phi
  double p;  // dphi/dy
};

struct FlowOptions {
  double tolerance = 1e-10;
  std::size_t samples = 201;
};

// Uniform samples on [initial.y, y_end]; requires y_end > initial.y > 0.
std::vector<PhaseState> hamiltonian_flow(const PhaseState& initial, const CoulombParams& params,
                                         double y_end, const FlowOptions& options = {});

// Samples on an explicit grid, which may run backward in time.
std::vector<PhaseState> hamiltonian_flow(const PhaseState& initial, const CoulombParams& params,
                                         std::span<const double> grid, double tolerance);

// I = (q_const (q/rho)^2 + (rho p - rho' q)^2) / 2.
// Throws MismatchError if state.y != amp.y, DomainError if amp.rho <= 0.
double ermakov_lewis_invariant(const PhaseState& state, const MilneSample& amp, double q_const);

// p^2/2 + Q(y) q^2/2, the frozen-time oscillator energy.
double instantaneous_energy(const PhaseState& state, const CoulombParams& params);

struct JointSample {
  PhaseState state;
  MilneSample amplitude;
};

// Integrates the oscillator and the Pinney amplitude as one coupled system so
// both share the same steps. Both initial values must sit at the same y.
std::vector<JointSample> joint_flow(const PhaseState& initial, const MilneSample& amplitude,
                                    const CoulombParams& params, double q_const,
                                    std::span<const double> grid, double tolerance);

std::vector<JointSample> joint_flow(const PhaseState& initial, const MilneSample& amplitude,
                                    const Potential& potential, double q_const,
                                    std::span<const double> grid, double tolerance);

}  // namespace zm
