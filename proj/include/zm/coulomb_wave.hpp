#pragma once

// The repulsive Coulomb equation in the transformed coordinate y = x^2,
//
//   phi'' + Q(y) phi = 0,   Q(y) = k^2 - k eps / y + 3 / (16 y^2),
//
// its large-y phase-shifted sine/cosine pair, and numerical solutions started
// from the Frobenius expansion at the regular singular point y = 0.

#include <span>
#include <vector>

namespace zm {

struct CoulombParams {
  double eps = 0.0;    // reduced spectral parameter
  double k = 1.0;      // reduced wavenumber
  double l_r = -0.25;  // partial wave number; only enters the asymptotic phase

  // Throws DomainError unless eps is finite, k > 0 and l_r > -1.
  void validate() const;
};

struct WaveSample {
  double y;
  double phi;
  double dphi;
};

// Frobenius branches, named by leading behaviour near y = 0.
enum class Branch {
  kRegular,   // y^{3/4}
  kSingular,  // y^{1/4}
};

inline constexpr double kDefaultFrobeniusStart = 1e-3;
inline constexpr double kDefaultWaveTolerance = 1e-10;

struct WaveOptions {
  double tolerance = kDefaultWaveTolerance;
  std::size_t samples = 201;
};

double effective_potential(double y, const CoulombParams& p);

// theta(y) = k y - (eps/2) ln(2 k y) - l_r pi / 2 + arg Gamma(l_r + 1 + i eps/2).
double phase_argument(double y, const CoulombParams& p);

// d theta / dy = k - eps / (2 y).
double phase_rate(double y, const CoulombParams& p);

struct AsymptoticPair {
  double phi1;  // sin theta
  double phi2;  // cos theta
};

AsymptoticPair asymptotic_pair(double y, const CoulombParams& p);

struct AsymptoticWaves {
  WaveSample phi1;
  WaveSample phi2;
};

// The asymptotic pair together with its exact y-derivatives.
AsymptoticWaves asymptotic_waves(double y, const CoulombParams& p);

double indicial_exponent(Branch branch);

// Frobenius series of the requested branch, summed to convergence at y.
// Throws ToleranceError if cancellation in the series would exceed tolerance.
WaveSample frobenius_start(double y, const CoulombParams& p, Branch branch,
                           double tolerance = kDefaultWaveTolerance);

// Solution of the branch from y_start to y_end sampled on `options.samples`
// evenly spaced points (first sample at y_start).
std::vector<WaveSample> integrate_schrodinger(const CoulombParams& p, double y_start,
                                              double y_end, Branch branch,
                                              const WaveOptions& options = {});

// Same, sampled on an explicit ascending grid with every point >= y_start.
std::vector<WaveSample> integrate_schrodinger(const CoulombParams& p, double y_start,
                                              std::span<const double> grid,
                                              Branch branch, double tolerance);

// Continues a solution from arbitrary initial data. The grid may run forward
// or backward from initial.y.
std::vector<WaveSample> propagate_wave(const CoulombParams& p, const WaveSample& initial,
                                       std::span<const double> grid, double tolerance);

// a.phi * b.dphi - a.dphi * b.phi. Throws MismatchError unless a.y == b.y.
double wronskian(const WaveSample& a, const WaveSample& b);

// W(regular, singular) at each grid point, both Frobenius branches carried
// together from y_start in quad precision. Under the barrier both branches
// grow like e^{pi eps / 2} while W stays O(1), so forming W from double
// samples cancels ~e^{pi eps} ulps; this keeps that cancellation in 113 bits.
// Same grid contract as integrate_schrodinger.
std::vector<double> wronskian_profile(const CoulombParams& p, double y_start,
                                      std::span<const double> grid, double tolerance);

}  // namespace zm
