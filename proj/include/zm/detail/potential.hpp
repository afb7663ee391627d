#pragma once

#include "zm/coulomb_wave.hpp"
#include "zm/detail/ode_driver.hpp"

namespace zm::detail {

inline OdeReal coulomb_potential(OdeReal y, const CoulombParams& p) {
  const OdeReal k = p.k;
  return k * k - k * static_cast<OdeReal>(p.eps) / y + 3.0L / (16.0L * y * y);
}

}  // namespace zm::detail
