#pragma once

#include <cstddef>
#include <ostream>

#include "zm/milne.hpp"

namespace zm {

// Long-format text: header "y,eps,n_M", then one row per cell with 12
// significant digits, eps-major then y. Returns bytes written; throws Error
// if the sink fails.
std::size_t write_grid(const MilneGrid& grid, std::ostream& sink);

}  // namespace zm
