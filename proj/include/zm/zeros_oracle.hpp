#pragma once

// Empirical ground truth for the zero density: ordinates of zeta zeros on the
// critical line, either read from a published table or located by a sign scan
// of the Hardy Z function.
//
// Table format: UTF-8 text, one decimal ordinate per line, ascending; lines
// starting with '#' and blank lines are ignored.

#include <cstddef>
#include <istream>
#include <ostream>
#include <vector>

#include "zm/specfun.hpp"
#include "zm/zero_density.hpp"

namespace zm {

inline constexpr double kScanMinHeight = 10.0;
inline constexpr double kScanMaxHeight = 200.0;
inline constexpr double kScanMaxStep = 0.05;

class ZeroTable {
 public:
  ZeroTable() = default;
  // Throws MonotonicityError unless strictly increasing, DomainError unless
  // every ordinate is finite and > 1.
  explicit ZeroTable(std::vector<double> ordinates);

  const std::vector<double>& ordinates() const noexcept { return ordinates_; }
  std::size_t size() const noexcept { return ordinates_.size(); }
  bool empty() const noexcept { return ordinates_.empty(); }

  // Number of ordinates <= t.
  std::size_t count_below(double t) const;

 private:
  std::vector<double> ordinates_;
};

// Throws ParseError (with line number) or MonotonicityError.
ZeroTable load_zero_table(std::istream& source);

// Writes the table in the interchange format with 12 decimals.
void write_zero_table(const ZeroTable& table, std::ostream& sink);

// theta(t) = arg Gamma(1/4 + i t/2) - (t/2) ln pi.
double riemann_siegel_theta(double t);

// zeta(s) for Re s > 0, s != 1, |Im s| <= kScanMaxHeight, through the
// alternating eta series with Chebyshev-weighted acceleration.
Complex zeta(Complex s);

// Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t.
double hardy_z(double t);

// Sign changes of Z on a uniform grid over [0, t_max], each refined by
// bisection. Requires 10 <= t_max <= 200 and 0 < grid_step <= 0.05, else
// RangeError.
ZeroTable scan_zeros(double t_max, double grid_step = 0.01);

// Centered sliding-window count / window, evaluated at every ordinate.
// Throws EmptyTableError for an empty table, DomainError for window <= 0.
DensityCurve empirical_density(const ZeroTable& table, double window);

}  // namespace zm
