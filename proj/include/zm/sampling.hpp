#pragma once

#include <cstddef>
#include <vector>

namespace zm {

// count points from a to b inclusive, evenly spaced; the last point is exactly b.
inline std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> v(count);
  if (count == 0) return v;
  if (count == 1) {
    v[0] = a;
    return v;
  }
  const double h = (b - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = a + h * static_cast<double>(i);
  v.back() = b;
  return v;
}

}  // namespace zm
