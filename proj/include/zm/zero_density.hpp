#pragma once

// Smooth densities of zeta zeros on the critical line and of the matching
// repulsive-Coulomb phase shift, both as functions of the reduced spectral
// parameter eps.

#include <span>
#include <vector>

namespace zm {

enum class DensityKind { kZeta, kCoulomb, kMilne, kEmpiricalZeta };

// A sampled density. Abscissae strictly increasing, one value per abscissa.
class DensityCurve {
 public:
  DensityCurve(DensityKind kind, std::vector<double> epsilons,
               std::vector<double> values);

  DensityKind kind() const noexcept { return kind_; }
  const std::vector<double>& epsilons() const noexcept { return epsilons_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return epsilons_.size(); }

 private:
  DensityKind kind_;
  std::vector<double> epsilons_;
  std::vector<double> values_;
};

// ln(pi)/(2*pi): the constant offset separating the Coulomb density from the
// zeta-zero density as eps grows.
double density_shift();

// n_Z(eps) = -ln(pi)/(2 pi) + Re Psi(1/4 + i eps/2) / (2 pi). Negative for
// small eps; no sign constraint is applied.
double riemann_zero_density(double eps);

// F(eps) = pi/2 - atan(csch(pi eps)), eps > 0. Evaluated as the equivalent
// atan(sinh(pi eps)), which stays accurate as eps -> 0.
double coulomb_phase_function(double eps);

// F'(eps) = pi sech(pi eps), eps > 0.
double coulomb_phase_derivative(double eps);

// n_C(eps) = -F'(eps)/(2 pi) + Re Psi(1/4 + i eps/2) / (2 pi), eps > 0.
double coulomb_density(double eps);

// n_C(eps) - n_Z(eps). Equals ln(pi)/(2 pi) - sech(pi eps)/2.
double density_gap(double eps);

// Antiderivative of n_Z normalised like the Riemann-von Mangoldt count:
// Im log Gamma(1/4 + iT/2)/pi - T ln(pi)/(2 pi) + 1, T > 0.
double smooth_zero_count(double t);

DensityCurve zeta_density_curve(std::span<const double> epsilons);
DensityCurve coulomb_density_curve(std::span<const double> epsilons);

}  // namespace zm
