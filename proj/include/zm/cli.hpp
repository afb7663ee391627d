#pragma once

// Command-line front end. Every command writes delimited text with a header
// line to --out (or standard output when --out is omitted or "-").
//
// Exit codes: 0 success, 1 computation or I/O failure, 2 usage error.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zm/milne.hpp"

namespace zm::cli {

enum class Command { kDensity, kMilneGrid, kCompareZeros, kPinneyCheck, kDynamicsDemo };

struct DensityArgs {
  double eps_min = 0.1;
  double eps_max = 10.0;
  std::size_t steps = 100;
};

struct CompareZerosArgs {
  double t_max = 100.0;
  double step = 0.01;
  double window = 20.0;
  std::string zeros_file;   // scan when empty
  std::string density_out;  // optional t,empirical,n_Z,n_C curve
};

struct PinneyCheckArgs {
  double eps = 2.0;
  double k = 1.0;
  double y0 = 4.0;
  double y_end = 10.0;
  std::size_t samples = 601;
  std::optional<double> q_const;  // defaults to k^2
  double tolerance = 1e-10;
};

struct DynamicsArgs {
  double eps = 2.0;
  double k = 1.0;
  double y0 = 1.0;
  double y_end = 10.0;
  double q0 = 1.0;
  double p0 = 0.0;
  std::size_t samples = 451;
  std::optional<double> q_const;
  double tolerance = 1e-10;
};

struct RunConfig {
  Command command = Command::kDensity;
  DensityArgs density;
  GridSpec grid;
  double grid_k = 1.0;
  CompareZerosArgs compare;
  PinneyCheckArgs pinney;
  DynamicsArgs dynamics;
  std::string out;

  // Throws UsageError on out-of-order ranges, too-small counts and similar.
  void validate() const;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Probe heights reported by compare-zeros (those not exceeding t_max).
inline constexpr double kCompareProbes[] = {20.0, 50.0, 100.0};

// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace zm::cli
