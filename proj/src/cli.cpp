#include "zm/cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "zm/dynamics.hpp"
#include "zm/errors.hpp"
#include "zm/grid_io.hpp"
#include "zm/sampling.hpp"
#include "zm/zero_density.hpp"
#include "zm/zeros_oracle.hpp"

namespace zm::cli {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

// Opens --out, falling back to the provided stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw Error("write to output failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void run_density(const RunConfig& config, std::ostream& out) {
  const DensityArgs& a = config.density;
  Sink sink(config.out, out);
  auto& os = sink.stream();
  os << "eps,n_Z,n_C,gap\n";
  for (double eps : linspace(a.eps_min, a.eps_max, a.steps)) {
    os << fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", eps, riemann_zero_density(eps),
                      coulomb_density(eps), density_gap(eps));
  }
  sink.finish();
}

void run_milne_grid(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const MilneGrid grid = milne_grid(config.grid, config.grid_k);
  for (const SkippedRow& row : grid.skipped) {
    err << fmt::format("warning: skipped eps = {:.12g}: {}\n", row.eps, row.reason);
  }
  Sink sink(config.out, out);
  write_grid(grid, sink.stream());
  sink.finish();
}

void run_compare_zeros(const RunConfig& config, std::ostream& out) {
  const CompareZerosArgs& a = config.compare;
  ZeroTable table;
  if (a.zeros_file.empty()) {
    table = scan_zeros(a.t_max, a.step);
  } else {
    std::ifstream in(a.zeros_file);
    if (!in) throw Error("cannot open zero table '" + a.zeros_file + "'");
    table = load_zero_table(in);
  }

  Sink sink(config.out, out);
  auto& os = sink.stream();
  os << "T,smooth_count,empirical_count,difference\n";
  for (double probe : kCompareProbes) {
    if (probe > a.t_max) continue;
    const double smooth = smooth_zero_count(probe);
    const std::size_t empirical = table.count_below(probe);
    os << fmt::format("{:.12g},{:.12g},{},{:.12g}\n", probe, smooth, empirical,
                      smooth - static_cast<double>(empirical));
  }
  sink.finish();

  if (!a.density_out.empty()) {
    const DensityCurve curve = empirical_density(table, a.window);
    Sink density_sink(a.density_out, out);
    auto& ds = density_sink.stream();
    ds << "t,empirical,n_Z,n_C\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double t = curve.epsilons()[i];
      ds << fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", t, curve.values()[i],
                        riemann_zero_density(t), coulomb_density(t));
    }
    density_sink.finish();
  }
}

void run_pinney_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PinneyCheckArgs& a = config.pinney;
  const CoulombParams p{a.eps, a.k};
  const double q_const = a.q_const.value_or(default_pinney_constant(p));
  const MilneSample seed = milne_closed_form(a.y0, p);
  const auto trajectory = integrate_pinney(p, q_const, a.y0, seed.rho, seed.drho, a.y_end,
                                           {a.tolerance, a.samples});

  Sink sink(config.out, out);
  auto& os = sink.stream();
  os << "y,rho_ode,rho_closed,rel_gap\n";
  double worst = 0.0;
  for (const MilneSample& s : trajectory) {
    const double closed = milne_closed_form(s.y, p).rho;
    const double gap = std::abs(s.rho - closed) / closed;
    worst = std::max(worst, gap);
    os << fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", s.y, s.rho, closed, gap);
  }
  sink.finish();
  err << fmt::format("max relative gap: {:.6g}\n", worst);
}

void run_dynamics_demo(const RunConfig& config, std::ostream& out) {
  const DynamicsArgs& a = config.dynamics;
  const CoulombParams p{a.eps, a.k};
  const double q_const = a.q_const.value_or(default_pinney_constant(p));
  const MilneSample amp0 = milne_closed_form(a.y0, p);
  const std::vector<double> grid = linspace(a.y0, a.y_end, a.samples);
  const auto samples = joint_flow({a.y0, a.q0, a.p0}, amp0, p, q_const, grid, a.tolerance);

  Sink sink(config.out, out);
  auto& os = sink.stream();
  os << "y,q,p,rho,drho,invariant,energy\n";
  for (const JointSample& s : samples) {
    os << fmt::format("{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", s.state.y,
                      s.state.q, s.state.p, s.amplitude.rho, s.amplitude.drho,
                      ermakov_lewis_invariant(s.state, s.amplitude, q_const),
                      instantaneous_energy(s.state, p));
  }
  sink.finish();
}

}  // namespace

void RunConfig::validate() const {
  switch (command) {
    case Command::kDensity:
      require(finite_positive(density.eps_min), "--eps-min must be > 0");
      require(std::isfinite(density.eps_max) && density.eps_max > density.eps_min,
              "--eps-max must exceed --eps-min");
      require(density.steps >= 2, "--steps must be >= 2");
      break;
    case Command::kMilneGrid:
      require(finite_positive(grid.y_min) && std::isfinite(grid.y_max) &&
                  grid.y_max > grid.y_min,
              "y range must satisfy 0 < --y-min < --y-max");
      require(finite_positive(grid.eps_min) && std::isfinite(grid.eps_max) &&
                  grid.eps_max > grid.eps_min,
              "eps range must satisfy 0 < --eps-min < --eps-max");
      require(grid.y_count >= 2 && grid.eps_count >= 2, "grid counts must be >= 2");
      require(finite_positive(grid_k), "--k must be > 0");
      break;
    case Command::kCompareZeros:
      require(std::isfinite(compare.t_max) && compare.t_max >= kScanMinHeight &&
                  compare.t_max <= kScanMaxHeight,
              "--t-max must lie in [10, 200]");
      require(finite_positive(compare.step) && compare.step <= kScanMaxStep,
              "--step must lie in (0, 0.05]");
      require(finite_positive(compare.window), "--window must be > 0");
      break;
    case Command::kPinneyCheck:
      require(std::isfinite(pinney.eps), "--eps must be finite");
      require(finite_positive(pinney.k), "--k must be > 0");
      require(finite_positive(pinney.y0) && std::isfinite(pinney.y_end) &&
                  pinney.y_end > pinney.y0,
              "requires 0 < --y0 < --y-end");
      require(pinney.samples >= 2, "--samples must be >= 2");
      require(finite_positive(pinney.tolerance), "--tol must be > 0");
      break;
    case Command::kDynamicsDemo:
      require(std::isfinite(dynamics.eps), "--eps must be finite");
      require(finite_positive(dynamics.k), "--k must be > 0");
      require(finite_positive(dynamics.y0) && std::isfinite(dynamics.y_end) &&
                  dynamics.y_end > dynamics.y0,
              "requires 0 < --y0 < --y-end");
      require(std::isfinite(dynamics.q0) && std::isfinite(dynamics.p0),
              "--q0/--p0 must be finite");
      require(dynamics.samples >= 2, "--samples must be >= 2");
      require(finite_positive(dynamics.tolerance), "--tol must be > 0");
      break;
  }
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    switch (config.command) {
      case Command::kDensity:
        run_density(config, out);
        break;
      case Command::kMilneGrid:
        run_milne_grid(config, out, err);
        break;
      case Command::kCompareZeros:
        run_compare_zeros(config, out);
        break;
      case Command::kPinneyCheck:
        run_pinney_check(config, out, err);
        break;
      case Command::kDynamicsDemo:
        run_dynamics_demo(config, out);
        break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Zeta-zero densities, Coulomb phase shifts and the Milne amplitude"};
  app.require_subcommand(1);

  auto* density = app.add_subcommand("density", "n_Z, n_C and their gap over an eps range");
  density->add_option("--eps-min", config.density.eps_min, "smallest eps")->capture_default_str();
  density->add_option("--eps-max", config.density.eps_max, "largest eps")->capture_default_str();
  density->add_option("--steps", config.density.steps, "number of rows")->capture_default_str();
  density->add_option("--out", config.out, "output file (default stdout)");

  auto* grid = app.add_subcommand("milne-grid", "n_M(y, eps) over a Cartesian grid");
  grid->add_option("--y-min", config.grid.y_min)->capture_default_str();
  grid->add_option("--y-max", config.grid.y_max)->capture_default_str();
  grid->add_option("--y-count", config.grid.y_count)->capture_default_str();
  grid->add_option("--eps-min", config.grid.eps_min)->capture_default_str();
  grid->add_option("--eps-max", config.grid.eps_max)->capture_default_str();
  grid->add_option("--eps-count", config.grid.eps_count)->capture_default_str();
  grid->add_option("--k", config.grid_k, "reduced wavenumber")->capture_default_str();
  grid->add_option("--out", config.out, "output file (default stdout)");

  auto* compare = app.add_subcommand("compare-zeros", "smooth vs empirical zero counts");
  compare->add_option("--t-max", config.compare.t_max, "scan height")->capture_default_str();
  compare->add_option("--step", config.compare.step, "scan grid step")->capture_default_str();
  compare->add_option("--zeros", config.compare.zeros_file, "zero table to use instead of scanning");
  compare->add_option("--window", config.compare.window, "empirical density window")
      ->capture_default_str();
  compare->add_option("--density-out", config.compare.density_out,
                      "also write the empirical density curve here");
  compare->add_option("--out", config.out, "output file (default stdout)");

  auto* pinney = app.add_subcommand("pinney-check", "Pinney trajectory vs closed-form amplitude");
  pinney->add_option("--eps", config.pinney.eps)->capture_default_str();
  pinney->add_option("--k", config.pinney.k)->capture_default_str();
  pinney->add_option("--y0", config.pinney.y0)->capture_default_str();
  pinney->add_option("--y-end", config.pinney.y_end)->capture_default_str();
  pinney->add_option("--samples", config.pinney.samples)->capture_default_str();
  pinney->add_option("--q-const", config.pinney.q_const, "Pinney constant (default k^2)");
  pinney->add_option("--tol", config.pinney.tolerance)->capture_default_str();
  pinney->add_option("--out", config.out, "output file (default stdout)");

  auto* dynamics = app.add_subcommand("dynamics-demo", "oscillator flow and Ermakov-Lewis invariant");
  dynamics->add_option("--eps", config.dynamics.eps)->capture_default_str();
  dynamics->add_option("--k", config.dynamics.k)->capture_default_str();
  dynamics->add_option("--y0", config.dynamics.y0)->capture_default_str();
  dynamics->add_option("--y-end", config.dynamics.y_end)->capture_default_str();
  dynamics->add_option("--q0", config.dynamics.q0)->capture_default_str();
  dynamics->add_option("--p0", config.dynamics.p0)->capture_default_str();
  dynamics->add_option("--samples", config.dynamics.samples)->capture_default_str();
  dynamics->add_option("--q-const", config.dynamics.q_const, "Pinney constant (default k^2)");
  dynamics->add_option("--tol", config.dynamics.tolerance)->capture_default_str();
  dynamics->add_option("--out", config.out, "output file (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("zm");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (density->parsed()) {
    config.command = Command::kDensity;
  } else if (grid->parsed()) {
    config.command = Command::kMilneGrid;
  } else if (compare->parsed()) {
    config.command = Command::kCompareZeros;
  } else if (pinney->parsed()) {
    config.command = Command::kPinneyCheck;
  } else {
    config.command = Command::kDynamicsDemo;
  }
  return execute(config, out, err);
}

}  // namespace zm::cli
