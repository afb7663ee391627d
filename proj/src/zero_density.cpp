#include "zm/zero_density.hpp"

#include <cmath>
#include <numbers>

#include "zm/errors.hpp"
#include "zm/specfun.hpp"

namespace zm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double eps, const char* fn) {
  if (!std::isfinite(eps) || eps <= 0.0) {
    throw DomainError(std::string(fn) + ": requires finite eps > 0");
  }
}

double real_digamma_quarter(double eps) {
  return digamma(Complex{0.25, 0.5 * eps}).real();
}

}  // namespace

DensityCurve::DensityCurve(DensityKind kind, std::vector<double> epsilons,
                           std::vector<double> values)
    : kind_(kind), epsilons_(std::move(epsilons)), values_(std::move(values)) {
  if (epsilons_.size() != values_.size()) {
    throw DomainError("DensityCurve: abscissa/value length mismatch");
  }
  for (std::size_t i = 1; i < epsilons_.size(); ++i) {
    if (!(epsilons_[i] > epsilons_[i - 1])) {
      throw MonotonicityError("DensityCurve: abscissae must be strictly increasing");
    }
  }
}

double density_shift() { return std::log(kPi) / kTwoPi; }

double riemann_zero_density(double eps) {
  if (!std::isfinite(eps)) {
    throw DomainError("riemann_zero_density: non-finite eps");
  }
  return -density_shift() + real_digamma_quarter(eps) / kTwoPi;
}

double coulomb_phase_function(double eps) {
  require_positive(eps, "coulomb_phase_function");
  return std::atan(std::sinh(kPi * eps));
}

double coulomb_phase_derivative(double eps) {
  require_positive(eps, "coulomb_phase_derivative");
  return kPi / std::cosh(kPi * eps);
}

double coulomb_density(double eps) {
  require_positive(eps, "coulomb_density");
  return (-coulomb_phase_derivative(eps) + real_digamma_quarter(eps)) / kTwoPi;
}

double density_gap(double eps) {
  require_positive(eps, "density_gap");
  // The Re Psi terms of n_C and n_Z cancel identically; dropping them keeps
  // the exponentially small remainder free of O(1) rounding noise.
  return density_shift() - coulomb_phase_derivative(eps) / kTwoPi;
}

double smooth_zero_count(double t) {
  if (!std::isfinite(t) || t <= 0.0) {
    throw DomainError("smooth_zero_count: requires finite T > 0");
  }
  return arg_gamma(Complex{0.25, 0.5 * t}) / kPi - t * density_shift() + 1.0;
}

DensityCurve zeta_density_curve(std::span<const double> epsilons) {
  std::vector<double> values;
  values.reserve(epsilons.size());
  for (double eps : epsilons) values.push_back(riemann_zero_density(eps));
  return {DensityKind::kZeta, {epsilons.begin(), epsilons.end()}, std::move(values)};
}

DensityCurve coulomb_density_curve(std::span<const double> epsilons) {
  std::vector<double> values;
  values.reserve(epsilons.size());
  for (double eps : epsilons) values.push_back(coulomb_density(eps));
  return {DensityKind::kCoulomb, {epsilons.begin(), epsilons.end()}, std::move(values)};
}

}  // namespace zm
