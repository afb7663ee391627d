#include "zm/coulomb_wave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zm/detail/ode_driver.hpp"
#include "zm/detail/potential.hpp"
#include "zm/detail/quad.hpp"
#include "zm/errors.hpp"
#include "zm/sampling.hpp"
#include "zm/specfun.hpp"

namespace zm {
namespace {

using detail::OdeReal;
using detail::OdeState;

constexpr std::size_t kMaxFrobeniusTerms = 2000;

void require_positive_y(double y, const char* fn) {
  if (!std::isfinite(y) || y <= 0.0) {
    throw DomainError(std::string(fn) + ": requires finite y > 0");
  }
}

struct LinearSystem {
  CoulombParams params;
  void operator()(const OdeState<2>& x, OdeState<2>& dxdt, OdeReal y) const {
    dxdt[0] = x[1];
    dxdt[1] = -detail::coulomb_potential(y, params) * x[0];
  }
};

struct FrobeniusValue {
  OdeReal phi;
  OdeReal dphi;
};

FrobeniusValue sum_frobenius(OdeReal y, const CoulombParams& p, double s, double tolerance) {
  const OdeReal k = p.k;
  const OdeReal ke = k * static_cast<OdeReal>(p.eps);
  const OdeReal k2 = k * k;

  OdeReal c_prev2 = 0.0L;
  OdeReal c_prev = 1.0L;  // c_0
  OdeReal y_pow = 1.0L;
  OdeReal sum = 1.0L;
  OdeReal dsum = s;
  OdeReal largest = 1.0L;
  std::size_t n = 1;
  for (; n < kMaxFrobeniusTerms; ++n) {
    const OdeReal sn = s + static_cast<OdeReal>(n);
    const OdeReal c = (ke * c_prev - k2 * c_prev2) / (sn * (sn - 1.0L) + 3.0L / 16.0L);
    y_pow *= y;
    const OdeReal term = c * y_pow;
    sum += term;
    dsum += sn * term;
    largest = std::max(largest, std::fabs(term));
    c_prev2 = c_prev;
    c_prev = c;
    // The recurrence is three-term; two consecutive negligible coefficients
    // end the tail.
    const OdeReal tiny = std::numeric_limits<OdeReal>::epsilon() * std::fabs(sum);
    if (n >= 2 && std::fabs(term) <= tiny && std::fabs(c_prev2 * y_pow / y) <= tiny) break;
  }
  if (n == kMaxFrobeniusTerms ||
      largest * std::numeric_limits<OdeReal>::epsilon() * 8 > tolerance * std::fabs(sum)) {
    throw ToleranceError(
        "frobenius_start: start point too far from y = 0 for the requested tolerance");
  }
  const OdeReal ys = std::pow(y, static_cast<OdeReal>(s));
  return {ys * sum, ys / y * dsum};
}

void validate_interval(double y_start, double y_end, const char* fn) {
  if (!std::isfinite(y_start) || !std::isfinite(y_end) || !(y_start > 0.0) ||
      !(y_end > y_start)) {
    throw DomainError(std::string(fn) + ": requires 0 < y_start < y_end");
  }
}

std::vector<WaveSample> to_samples(std::span<const double> grid,
                                   const std::vector<OdeState<2>>& states) {
  std::vector<WaveSample> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.push_back({grid[i], static_cast<double>(states[i][0]),
                   static_cast<double>(states[i][1])});
  }
  return out;
}

}  // namespace

void CoulombParams::validate() const {
  if (!std::isfinite(eps)) throw DomainError("CoulombParams: eps must be finite");
  if (!std::isfinite(k) || !(k > 0.0)) throw DomainError("CoulombParams: k must be > 0");
  if (!std::isfinite(l_r) || !(l_r > -1.0)) {
    throw DomainError("CoulombParams: l_r must be > -1");
  }
}

double effective_potential(double y, const CoulombParams& p) {
  p.validate();
  require_positive_y(y, "effective_potential");
  return p.k * p.k - p.k * p.eps / y + 3.0 / (16.0 * y * y);
}

double phase_argument(double y, const CoulombParams& p) {
  p.validate();
  require_positive_y(y, "phase_argument");
  return p.k * y - 0.5 * p.eps * std::log(2.0 * p.k * y) - 0.5 * p.l_r * std::numbers::pi +
         arg_gamma(Complex{p.l_r + 1.0, 0.5 * p.eps});
}

double phase_rate(double y, const CoulombParams& p) {
  p.validate();
  require_positive_y(y, "phase_rate");
  return p.k - 0.5 * p.eps / y;
}

AsymptoticPair asymptotic_pair(double y, const CoulombParams& p) {
  const double theta = phase_argument(y, p);
  return {std::sin(theta), std::cos(theta)};
}

AsymptoticWaves asymptotic_waves(double y, const CoulombParams& p) {
  const double theta = phase_argument(y, p);
  const double rate = phase_rate(y, p);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {{y, s, rate * c}, {y, c, -rate * s}};
}

double indicial_exponent(Branch branch) {
  return branch == Branch::kRegular ? 0.75 : 0.25;
}

WaveSample frobenius_start(double y, const CoulombParams& p, Branch branch,
                           double tolerance) {
  p.validate();
  require_positive_y(y, "frobenius_start");
  const FrobeniusValue v = sum_frobenius(y, p, indicial_exponent(branch), tolerance);
  return {y, static_cast<double>(v.phi), static_cast<double>(v.dphi)};
}

std::vector<WaveSample> integrate_schrodinger(const CoulombParams& p, double y_start,
                                              double y_end, Branch branch,
                                              const WaveOptions& options) {
  validate_interval(y_start, y_end, "integrate_schrodinger");
  if (options.samples < 2) {
    throw DomainError("integrate_schrodinger: at least two samples required");
  }
  const std::vector<double> grid = linspace(y_start, y_end, options.samples);
  return integrate_schrodinger(p, y_start, grid, branch, options.tolerance);
}

std::vector<WaveSample> integrate_schrodinger(const CoulombParams& p, double y_start,
                                              std::span<const double> grid,
                                              Branch branch, double tolerance) {
  p.validate();
  if (grid.empty()) return {};
  require_positive_y(y_start, "integrate_schrodinger");
  if (grid.front() < y_start) {
    throw DomainError("integrate_schrodinger: grid starts before y_start");
  }
  const FrobeniusValue v =
      sum_frobenius(y_start, p, indicial_exponent(branch), tolerance);
  const auto states = detail::integrate_dense<2>(LinearSystem{p}, y_start, {v.phi, v.dphi},
                                                 grid, tolerance);
  return to_samples(grid, states);
}

std::vector<WaveSample> propagate_wave(const CoulombParams& p, const WaveSample& initial,
                                       std::span<const double> grid, double tolerance) {
  p.validate();
  require_positive_y(initial.y, "propagate_wave");
  for (double y : grid) require_positive_y(y, "propagate_wave");
  const auto states = detail::integrate_dense<2>(
      LinearSystem{p}, initial.y, {initial.phi, initial.dphi}, grid, tolerance);
  return to_samples(grid, states);
}

double wronskian(const WaveSample& a, const WaveSample& b) {
  if (a.y != b.y) {
    throw MismatchError("wronskian: samples taken at different y");
  }
  return a.phi * b.dphi - a.dphi * b.phi;
}

std::vector<double> wronskian_profile(const CoulombParams& p, double y_start,
                                      std::span<const double> grid, double tolerance) {
  using detail::QuadReal;
  using QuadState = std::array<QuadReal, 4>;
  p.validate();
  if (grid.empty()) return {};
  require_positive_y(y_start, "wronskian_profile");
  if (grid.front() < y_start) {
    throw DomainError("wronskian_profile: grid starts before y_start");
  }
  const FrobeniusValue reg = sum_frobenius(y_start, p, indicial_exponent(Branch::kRegular), tolerance);
  const FrobeniusValue sing =
      sum_frobenius(y_start, p, indicial_exponent(Branch::kSingular), tolerance);
  const QuadReal k = p.k;
  const QuadReal ke = k * QuadReal(p.eps);
  const QuadReal c = QuadReal(3) / 16;
  const auto system = [&](const QuadState& x, QuadState& dxdt, QuadReal y) {
    const QuadReal q = k * k - ke / y + c / (y * y);
    dxdt[0] = x[1];
    dxdt[1] = -q * x[0];
    dxdt[2] = x[3];
    dxdt[3] = -q * x[2];
  };
  const QuadState x0 = {QuadReal(reg.phi), QuadReal(reg.dphi), QuadReal(sing.phi),
                        QuadReal(sing.dphi)};
  const auto states =
      detail::integrate_dense_as<QuadReal, 4>(system, QuadReal(y_start), x0, grid, tolerance);
  std::vector<double> w(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const QuadState& x = states[i];
    w[i] = static_cast<double>(x[0] * x[3] - x[1] * x[2]);
  }
  return w;
}

}  // namespace zm
