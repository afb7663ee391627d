#include "zm/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "zm/errors.hpp"

namespace zm {
namespace {

// Below this modulus (or left of the imaginary axis, where the asymptotic
// series is not valid) the argument is shifted up by the recurrence. With
// eight asymptotic terms the truncation error at |z| = 15 is under 1e-19.
constexpr double kAsymptoticRadius = 15.0;

// Each unit of negative real part costs one recurrence step.
constexpr double kMinRealPart = -1e4;

bool needs_shift(Complex w) { return w.real() < 0.0 || std::abs(w) < kAsymptoticRadius; }

// B_2k for k = 1..8.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0,  7.0 / 6.0,  -3617.0 / 510.0,
};

void check_argument(Complex z, const char* fn) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(fn) + ": non-finite argument");
  }
  if (std::abs(z.imag()) > kMaxImaginaryPart) {
    throw OverflowError(std::string(fn) + ": |Im z| exceeds supported range 1e4");
  }
  if (z.real() < kMinRealPart) {
    throw DomainError(std::string(fn) + ": Re z below supported range -1e4");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError(std::string(fn) + ": pole at non-positive integer " +
                    std::to_string(z.real()));
  }
}

}  // namespace

Complex log_gamma(Complex z) {
  check_argument(z, "log_gamma");

  Complex shift_sum{0.0, 0.0};
  Complex w = z;
  while (needs_shift(w)) {
    shift_sum += std::log(w);
    w += 1.0;
  }

  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex power = inv;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double n = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / (n * (n - 1.0)) * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (w - 0.5) * std::log(w) - w + half_log_two_pi + series - shift_sum;
}

Complex digamma(Complex z) {
  check_argument(z, "digamma");

  Complex shift_sum{0.0, 0.0};
  Complex w = z;
  while (needs_shift(w)) {
    shift_sum += 1.0 / w;
    w += 1.0;
  }

  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex power = inv2;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double n = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / n * power;
    power *= inv2;
  }
  return std::log(w) - 0.5 * inv - series - shift_sum;
}

double arg_gamma(Complex z) {
  if (!(z.real() > 0.0)) {
    throw DomainError("arg_gamma: requires Re z > 0");
  }
  return log_gamma(z).imag();
}

}  // namespace zm
