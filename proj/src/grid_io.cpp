#include "zm/grid_io.hpp"

#include <fmt/format.h>

#include "zm/errors.hpp"

namespace zm {

std::size_t write_grid(const MilneGrid& grid, std::ostream& sink) {
  fmt::memory_buffer buffer;
  fmt::format_to(std::back_inserter(buffer), "y,eps,n_M\n");
  for (std::size_t i = 0; i < grid.eps_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.y_axis.size(); ++j) {
      fmt::format_to(std::back_inserter(buffer), "{:.12g},{:.12g},{:.12g}\n", grid.y_axis[j],
                     grid.eps_axis[i], grid.at(i, j));
    }
  }
  sink.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!sink) throw Error("write_grid: sink write failed");
  return buffer.size();
}

}  // namespace zm
