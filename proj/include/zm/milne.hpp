#pragma once

// Milne amplitude for the Coulomb problem. The closed form combines the
// asymptotic sine/cosine pair as
//
//   n_M = 1 / rho^2,   rho^2 = (alpha phi1 + beta phi2)^2 + phi2^2 / alpha^2,
//
// with alpha, beta read off phi1 and its derivative at y0 = 1/(2k), where the
// logarithmic term of the phase vanishes. An independent path integrates the
// Pinney equation rho'' + Q(y) rho = c / rho^3 directly.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zm/coulomb_wave.hpp"
#include "zm/zero_density.hpp"

namespace zm {

inline constexpr double kDegenerateAlpha = 1e-12;
inline constexpr double kAmplitudeFloor = 1e-8;

struct SuperpositionConstants {
  double alpha;
  double beta;
};

struct MilneSample {
  double y;
  double rho;
  double drho;
  double n_m;  // 1 / rho^2
};

// alpha = phi1(1/2k) = sin(theta0), beta = phi1'(1/2k) = k (1 - eps) cos(theta0).
// Throws DegenerateAlphaError if |alpha| < kDegenerateAlpha.
SuperpositionConstants superposition_constants(const CoulombParams& p);

// Closed-form amplitude and its derivative at y.
MilneSample milne_closed_form(double y, const CoulombParams& p);

// n_M(y, eps). Strictly positive.
double milne_density(double y, const CoulombParams& p);

// n_M at fixed y sampled over eps.
DensityCurve milne_density_curve(double y, std::span<const double> epsilons, double k = 1.0);

struct GridSpec {
  double y_min = 0.1;
  double y_max = 10.0;
  std::size_t y_count = 100;
  double eps_min = 0.1;
  double eps_max = 10.0;
  std::size_t eps_count = 100;

  // Throws DomainError unless ranges are positive and ordered and counts >= 2.
  void validate() const;
};

struct SkippedRow {
  double eps;
  std::string reason;
};

// n_M over a Cartesian (eps, y) grid, one row per eps. Rows whose alpha is
// degenerate are dropped from eps_axis/values and listed in `skipped`.
struct MilneGrid {
  std::vector<double> y_axis;
  std::vector<double> eps_axis;
  std::vector<double> values;  // row-major, eps_axis.size() x y_axis.size()
  std::vector<SkippedRow> skipped;

  double at(std::size_t eps_index, std::size_t y_index) const {
    return values[eps_index * y_axis.size() + y_index];
  }
};

MilneGrid milne_grid(const GridSpec& spec, double k = 1.0);

// c = k^2: the Wronskian normalisation of the closed form at large y.
double default_pinney_constant(const CoulombParams& p);

struct PinneyOptions {
  double tolerance = 1e-10;
  std::size_t samples = 201;
};

using Potential = std::function<double(double)>;

// Integrates rho'' + Q(y) rho = q_const / rho^3 with Q from the Coulomb
// equation, from (y0, rho0, drho0) to y_end. Throws AmplitudeCollapseError if
// rho drops below kAmplitudeFloor, ToleranceError if the step control fails.
std::vector<MilneSample> integrate_pinney(const CoulombParams& p, double q_const, double y0,
                                          double rho0, double drho0, double y_end,
                                          const PinneyOptions& options = {});

std::vector<MilneSample> integrate_pinney(const CoulombParams& p, double q_const, double y0,
                                          double rho0, double drho0,
                                          std::span<const double> grid, double tolerance);

// Same equation with an arbitrary potential Q(y).
std::vector<MilneSample> integrate_pinney(const Potential& potential, double q_const,
                                          double y0, double rho0, double drho0,
                                          std::span<const double> grid, double tolerance);

}  // namespace zm
