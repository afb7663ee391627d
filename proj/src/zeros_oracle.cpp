#include "zm/zeros_oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "zm/errors.hpp"

namespace zm {
namespace {

// Cohen, Rodriguez Villegas and Zagier, algorithm 1: sum_{k>=0} (-1)^k a_k
// using n Chebyshev-weighted terms. For completely monotone a_k the relative
// error is about 2 * 5.828^-n.
template <class Term>
auto accelerated_alternating_sum(Term term, int n) {
  using Value = decltype(term(0));
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  Value sum{};
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * term(k);
    const double kk = k;
    b = (kk + n) * (kk - n) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return sum / d;
}

// Terms needed for ~1e-16 absolute error on the eta series at height t. The
// error bound carries a factor e^{pi |t| / 2} (1 + 2|t|) from 1/Gamma(s).
int eta_terms(double t) {
  const double a = std::abs(t);
  const double needed = 0.5 * std::numbers::pi * a + std::log(3.0 * (1.0 + 2.0 * a)) + 37.0;
  return std::max(20, static_cast<int>(std::ceil(needed / std::log(3.0 + std::sqrt(8.0)))));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

double refine_root(double lo, double hi, double z_lo) {
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid);
    if (z_mid == 0.0) return mid;
    if ((z_mid > 0.0) == (z_lo > 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates) : ordinates_(std::move(ordinates)) {
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    const double t = ordinates_[i];
    if (!std::isfinite(t) || !(t > 1.0)) {
      throw DomainError("ZeroTable: ordinates must be finite and > 1");
    }
    if (i > 0 && !(t > ordinates_[i - 1])) {
      throw MonotonicityError("ZeroTable: ordinates must be strictly increasing (index " +
                              std::to_string(i) + ")");
    }
  }
}

std::size_t ZeroTable::count_below(double t) const {
  return static_cast<std::size_t>(
      std::upper_bound(ordinates_.begin(), ordinates_.end(), t) - ordinates_.begin());
}

ZeroTable load_zero_table(std::istream& source) {
  std::vector<double> ordinates;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(source, line)) {
    ++line_number;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
      throw ParseError(line_number, "not a decimal number: '" + std::string(text) + "'");
    }
    if (!std::isfinite(value) || !(value > 1.0)) {
      throw ParseError(line_number, "ordinate must be finite and > 1");
    }
    if (!ordinates.empty() && !(value > ordinates.back())) {
      throw MonotonicityError("line " + std::to_string(line_number) +
                              ": ordinates must be strictly increasing");
    }
    ordinates.push_back(value);
  }
  if (source.bad()) throw Error("load_zero_table: read failure");
  return ZeroTable(std::move(ordinates));
}

void write_zero_table(const ZeroTable& table, std::ostream& sink) {
  for (double t : table.ordinates()) sink << fmt::format("{:.12f}\n", t);
  if (!sink) throw Error("write_zero_table: write failure");
}

double riemann_siegel_theta(double t) {
  return arg_gamma(Complex{0.25, 0.5 * t}) - 0.5 * t * std::log(std::numbers::pi);
}

Complex zeta(Complex s) {
  if (!(s.real() > 0.0) || !std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("zeta: requires finite s with Re s > 0");
  }
  if (std::abs(s.imag()) > kScanMaxHeight) {
    throw RangeError("zeta: |Im s| beyond the supported height 200");
  }
  const Complex factor = 1.0 - std::pow(Complex{2.0, 0.0}, 1.0 - s);
  if (std::abs(factor) < 1e-300) {
    throw PoleError("zeta: pole at s = 1");
  }
  const auto term = [s](int k) { return std::exp(-s * std::log(static_cast<double>(k + 1))); };
  const Complex eta = accelerated_alternating_sum(term, eta_terms(s.imag()));
  return eta / factor;
}

double hardy_z(double t) {
  const Complex rotated = std::polar(1.0, riemann_siegel_theta(t)) * zeta(Complex{0.5, t});
  return rotated.real();
}

ZeroTable scan_zeros(double t_max, double grid_step) {
  if (!std::isfinite(t_max) || t_max < kScanMinHeight || t_max > kScanMaxHeight) {
    throw RangeError("scan_zeros: t_max must lie in [10, 200]");
  }
  if (!std::isfinite(grid_step) || !(grid_step > 0.0) || grid_step > kScanMaxStep) {
    throw RangeError("scan_zeros: grid_step must lie in (0, 0.05]");
  }

  const auto intervals = static_cast<std::size_t>(std::ceil(t_max / grid_step));
  std::vector<double> roots;
  double t_prev = 0.0;
  double z_prev = hardy_z(t_prev);
  for (std::size_t i = 1; i <= intervals; ++i) {
    const double t = (i == intervals) ? t_max : grid_step * static_cast<double>(i);
    const double z = hardy_z(t);
    if (z == 0.0) {
      roots.push_back(t);
    } else if (z_prev != 0.0 && (z > 0.0) != (z_prev > 0.0)) {
      roots.push_back(refine_root(t_prev, t, z_prev));
    }
    t_prev = t;
    z_prev = z;
  }
  return ZeroTable(std::move(roots));
}

DensityCurve empirical_density(const ZeroTable& table, double window) {
  if (table.empty()) throw EmptyTableError("empirical_density: zero table is empty");
  if (!std::isfinite(window) || !(window > 0.0)) {
    throw DomainError("empirical_density: window must be > 0");
  }
  const auto& t = table.ordinates();
  std::vector<double> values;
  values.reserve(t.size());
  for (double centre : t) {
    const auto lo = std::lower_bound(t.begin(), t.end(), centre - 0.5 * window);
    const auto hi = std::upper_bound(t.begin(), t.end(), centre + 0.5 * window);
    values.push_back(static_cast<double>(hi - lo) / window);
  }
  return {DensityKind::kEmpiricalZeta, t, std::move(values)};
}

}  // namespace zm
