#include "zm/milne.hpp"

#include <cmath>

#include "zm/detail/ode_driver.hpp"
#include "zm/detail/potential.hpp"
#include "zm/errors.hpp"
#include "zm/sampling.hpp"

namespace zm {
namespace {

using detail::OdeReal;
using detail::OdeState;

void require_positive_range(double lo, double hi, const char* what) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || !(hi > lo)) {
    throw DomainError(std::string("GridSpec: ") + what + " range must satisfy 0 < min < max");
  }
}

template <class PotentialFn>
struct PinneySystem {
  PotentialFn potential;
  OdeReal q_const;

  void operator()(const OdeState<2>& x, OdeState<2>& dxdt, OdeReal y) const {
    const OdeReal rho = x[0];
    if (!(std::fabs(rho) >= kAmplitudeFloor)) {
      throw AmplitudeCollapseError("integrate_pinney: amplitude collapsed below 1e-8");
    }
    dxdt[0] = x[1];
    dxdt[1] = -potential(y) * rho + q_const / (rho * rho * rho);
  }
};

struct AmplitudeFloorCheck {
  void operator()(OdeReal y, const OdeState<2>& x) const {
    if (!(x[0] >= kAmplitudeFloor)) {
      throw AmplitudeCollapseError("integrate_pinney: amplitude collapsed below 1e-8 at y = " +
                                   std::to_string(static_cast<double>(y)));
    }
  }
};

template <class PotentialFn>
std::vector<MilneSample> run_pinney(PotentialFn potential, double q_const, double y0,
                                    double rho0, double drho0, std::span<const double> grid,
                                    double tolerance) {
  if (!std::isfinite(q_const)) throw DomainError("integrate_pinney: q_const must be finite");
  if (!std::isfinite(y0) || !(y0 > 0.0)) throw DomainError("integrate_pinney: requires y0 > 0");
  if (!std::isfinite(rho0) || !(rho0 > 0.0)) {
    throw DomainError("integrate_pinney: requires rho0 > 0");
  }
  if (!std::isfinite(drho0)) throw DomainError("integrate_pinney: drho0 must be finite");
  for (double y : grid) {
    if (!(y > 0.0)) throw DomainError("integrate_pinney: grid must lie in y > 0");
  }

  PinneySystem<PotentialFn> system{std::move(potential), q_const};
  const auto states = detail::integrate_dense<2>(system, y0, {rho0, drho0}, grid, tolerance,
                                                 AmplitudeFloorCheck{});
  std::vector<MilneSample> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = static_cast<double>(states[i][0]);
    if (!(rho >= kAmplitudeFloor)) {
      throw AmplitudeCollapseError("integrate_pinney: amplitude collapsed below 1e-8");
    }
    out.push_back({grid[i], rho, static_cast<double>(states[i][1]), 1.0 / (rho * rho)});
  }
  return out;
}

}  // namespace

SuperpositionConstants superposition_constants(const CoulombParams& p) {
  p.validate();
  const double y0 = 0.5 / p.k;
  const double theta0 = phase_argument(y0, p);
  const double alpha = std::sin(theta0);
  if (!(std::fabs(alpha) >= kDegenerateAlpha)) {
    throw DegenerateAlphaError("superposition_constants: |alpha| < 1e-12 at eps = " +
                               std::to_string(p.eps));
  }
  return {alpha, p.k * (1.0 - p.eps) * std::cos(theta0)};
}

MilneSample milne_closed_form(double y, const CoulombParams& p) {
  const SuperpositionConstants c = superposition_constants(p);
  const AsymptoticWaves w = asymptotic_waves(y, p);
  const double inv_alpha2 = 1.0 / (c.alpha * c.alpha);

  const double u = c.alpha * w.phi1.phi + c.beta * w.phi2.phi;
  const double du = c.alpha * w.phi1.dphi + c.beta * w.phi2.dphi;
  const double v = w.phi2.phi;
  const double dv = w.phi2.dphi;

  const double rho2 = u * u + v * v * inv_alpha2;
  const double rho = std::sqrt(rho2);
  return {y, rho, (u * du + v * dv * inv_alpha2) / rho, 1.0 / rho2};
}

double milne_density(double y, const CoulombParams& p) { return milne_closed_form(y, p).n_m; }

DensityCurve milne_density_curve(double y, std::span<const double> epsilons, double k) {
  std::vector<double> values;
  values.reserve(epsilons.size());
  for (double eps : epsilons) values.push_back(milne_density(y, {eps, k}));
  return {DensityKind::kMilne, {epsilons.begin(), epsilons.end()}, std::move(values)};
}

void GridSpec::validate() const {
  require_positive_range(y_min, y_max, "y");
  require_positive_range(eps_min, eps_max, "eps");
  if (y_count < 2 || eps_count < 2) throw DomainError("GridSpec: counts must be >= 2");
}

MilneGrid milne_grid(const GridSpec& spec, double k) {
  spec.validate();
  CoulombParams{0.0, k}.validate();

  MilneGrid grid;
  grid.y_axis = linspace(spec.y_min, spec.y_max, spec.y_count);
  grid.values.reserve(spec.y_count * spec.eps_count);
  for (double eps : linspace(spec.eps_min, spec.eps_max, spec.eps_count)) {
    const CoulombParams p{eps, k};
    try {
      std::vector<double> row;
      row.reserve(grid.y_axis.size());
      for (double y : grid.y_axis) row.push_back(milne_density(y, p));
      grid.values.insert(grid.values.end(), row.begin(), row.end());
      grid.eps_axis.push_back(eps);
    } catch (const DegenerateAlphaError& e) {
      grid.skipped.push_back({eps, e.what()});
    }
  }
  return grid;
}

double default_pinney_constant(const CoulombParams& p) {
  p.validate();
  return p.k * p.k;
}

std::vector<MilneSample> integrate_pinney(const CoulombParams& p, double q_const, double y0,
                                          double rho0, double drho0, double y_end,
                                          const PinneyOptions& options) {
  if (!std::isfinite(y_end) || !(y_end > y0)) {
    throw DomainError("integrate_pinney: requires 0 < y0 < y_end");
  }
  if (options.samples < 2) throw DomainError("integrate_pinney: at least two samples required");
  const std::vector<double> grid = linspace(y0, y_end, options.samples);
  return integrate_pinney(p, q_const, y0, rho0, drho0, grid, options.tolerance);
}

std::vector<MilneSample> integrate_pinney(const CoulombParams& p, double q_const, double y0,
                                          double rho0, double drho0,
                                          std::span<const double> grid, double tolerance) {
  p.validate();
  auto potential = [p](OdeReal y) { return detail::coulomb_potential(y, p); };
  return run_pinney(potential, q_const, y0, rho0, drho0, grid, tolerance);
}

std::vector<MilneSample> integrate_pinney(const Potential& potential, double q_const,
                                          double y0, double rho0, double drho0,
                                          std::span<const double> grid, double tolerance) {
  if (!potential) throw DomainError("integrate_pinney: empty potential");
  auto wrapped = [&potential](OdeReal y) {
    return static_cast<OdeReal>(potential(static_cast<double>(y)));
  };
  return run_pinney(wrapped, q_const, y0, rho0, drho0, grid, tolerance);
}

}  // namespace zm
