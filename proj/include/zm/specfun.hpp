#pragma once

// Gamma-family special functions of a complex argument.
//
// All routines shift the argument upward with the functional recurrence until
// |z| >= 15 and Re z >= 0, then apply the Stirling / digamma asymptotic
// series. For Re z > 0 every logarithm taken on the way has a positive real argument
// part, so Im log_gamma is the analytic continuation from the real axis (no
// 2*pi wrap) and arg_gamma is usable inside trigonometric phases.

#include <complex>

namespace zm {

using Complex = std::complex<double>;

// |Im z| above this raises OverflowError.
inline constexpr double kMaxImaginaryPart = 1e4;

// log Gamma(z). Throws PoleError at non-positive integers, OverflowError for
// |Im z| > kMaxImaginaryPart, DomainError for non-finite input or
// Re z < -1e4 (the recurrence walk would be too long). For
// Re z <= 0 the value is correct modulo 2*pi*i.
Complex log_gamma(Complex z);

// Psi(z) = Gamma'(z)/Gamma(z). Same error behaviour as log_gamma.
Complex digamma(Complex z);

// Continuous phase of Gamma(z), i.e. Im log_gamma(z). Requires Re z > 0.
double arg_gamma(Complex z);

}  // namespace zm
