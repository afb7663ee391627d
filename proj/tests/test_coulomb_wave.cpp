#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zm/coulomb_wave.hpp"
#include "zm/errors.hpp"
#include "zm/sampling.hpp"
#include "zm/specfun.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("effective potential") {
  const zm::CoulombParams p{1.0, 1.0};
  CHECK(zm::effective_potential(1.0, p) == doctest::Approx(0.1875).epsilon(1e-15));
  CHECK(std::abs(zm::effective_potential(1e9, p) - 1.0) < 1e-8);
  CHECK(std::abs(zm::effective_potential(1e9, {3.0, 2.0}) - 4.0) < 1e-8);

  // k^2 y^2 - k eps y + 3/16 = 0.
  const double disc = std::sqrt(1.0 - 4.0 * 3.0 / 16.0);
  const double lo = (1.0 - disc) / 2.0;
  const double hi = (1.0 + disc) / 2.0;
  CHECK(lo == doctest::Approx(0.25));
  CHECK(hi == doctest::Approx(0.75));
  CHECK(std::abs(zm::effective_potential(lo, p)) < 1e-14);
  CHECK(std::abs(zm::effective_potential(hi, p)) < 1e-14);
  CHECK(zm::effective_potential(0.5, p) < 0.0);

  CHECK_THROWS_AS(zm::effective_potential(0.0, p), zm::DomainError);
  CHECK_THROWS_AS(zm::effective_potential(-1.0, p), zm::DomainError);
  CHECK_THROWS_AS(zm::effective_potential(1.0, {1.0, 0.0}), zm::DomainError);
  CHECK_THROWS_AS(zm::effective_potential(1.0, {1.0, -2.0}), zm::DomainError);
}

TEST_CASE("phase argument") {
  for (double eps : {0.0, 0.7, 3.0, 9.5}) {
    const zm::CoulombParams p{eps, 1.0};
    const double expected = 0.5 + kPi / 8.0 + zm::arg_gamma({0.75, 0.5 * eps});
    CHECK(std::abs(zm::phase_argument(0.5, p) - expected) < 1e-14);
  }
  CHECK(std::abs(zm::phase_argument(1.0, {0.0, 1.0}) - 1.3926991) < 1e-7);

  auto g = zm::oracle::rng(3);
  for (int i = 0; i < 20; ++i) {
    const zm::CoulombParams p{zm::oracle::uniform(g, 0.1, 10.0), zm::oracle::uniform(g, 0.5, 2.0)};
    const double y = zm::oracle::uniform(g, 0.2, 20.0);
    const auto theta = [&](double x) { return zm::phase_argument(x, p); };
    CHECK(std::abs(zm::oracle::central_difference(theta, y, 1e-5) - (p.k - 0.5 * p.eps / y)) <
          1e-8);
    CHECK(zm::phase_rate(y, p) == doctest::Approx(p.k - 0.5 * p.eps / y));
  }
  CHECK_THROWS_AS(zm::phase_argument(0.0, {1.0, 1.0}), zm::DomainError);
  CHECK_THROWS_AS(zm::phase_argument(1.0, {1.0, 1.0, -1.5}), zm::DomainError);
}

TEST_CASE("asymptotic pair") {
  auto g = zm::oracle::rng(8);
  for (int i = 0; i < 50; ++i) {
    const zm::CoulombParams p{zm::oracle::uniform(g, 0.0, 10.0), zm::oracle::uniform(g, 0.2, 3.0)};
    const auto pair = zm::asymptotic_pair(zm::oracle::uniform(g, 0.05, 50.0), p);
    CHECK(std::abs(pair.phi1 * pair.phi1 + pair.phi2 * pair.phi2 - 1.0) < 1e-14);
  }
  const auto at_one = zm::asymptotic_pair(1.0, {0.0, 1.0});
  CHECK(std::abs(at_one.phi1 - 0.98419) < 1e-4);
  CHECK(std::abs(at_one.phi2 - 0.17716) < 1e-4);
  CHECK(std::abs(at_one.phi1 - std::sin(1.0 + kPi / 8.0)) < 1e-14);
}

TEST_CASE("asymptotic pair Wronskian is -(k - eps/2y) and not constant") {
  const zm::CoulombParams p{2.0, 1.0};
  for (double y : {0.3, 1.0, 4.0, 25.0}) {
    const auto w = zm::asymptotic_waves(y, p);
    CHECK(std::abs(zm::wronskian(w.phi1, w.phi2) + (p.k - 0.5 * p.eps / y)) < 1e-10);
  }
  const auto near = zm::asymptotic_waves(0.5, p);
  const auto far = zm::asymptotic_waves(10.0, p);
  CHECK(std::abs(zm::wronskian(near.phi1, near.phi2) - zm::wronskian(far.phi1, far.phi2)) > 0.5);
}

TEST_CASE("wronskian basics") {
  const zm::WaveSample a{1.0, 0.3, -1.2};
  const zm::WaveSample b{1.0, 2.0, 0.5};
  CHECK(zm::wronskian(a, a) == 0.0);
  CHECK(zm::wronskian(a, b) == doctest::Approx(-zm::wronskian(b, a)));
  CHECK_THROWS_AS(zm::wronskian(a, zm::WaveSample{1.5, 0.0, 0.0}), zm::MismatchError);
}

TEST_CASE("Frobenius start") {
  for (auto branch : {zm::Branch::kRegular, zm::Branch::kSingular}) {
    const double s = zm::indicial_exponent(branch);
    CHECK(std::abs(s * (s - 1.0) + 3.0 / 16.0) < 1e-15);
  }
  CHECK(zm::indicial_exponent(zm::Branch::kRegular) == 0.75);
  CHECK(zm::indicial_exponent(zm::Branch::kSingular) == 0.25);

  const zm::CoulombParams p{2.0, 1.0};
  const auto w = zm::frobenius_start(1e-3, p, zm::Branch::kRegular);
  CHECK(w.phi == doctest::Approx(std::pow(1e-3, 0.75)).epsilon(1e-2));
  CHECK(w.dphi == doctest::Approx(0.75 * std::pow(1e-3, -0.25)).epsilon(1e-2));

  // The series is a solution: it agrees with the integrator further out.
  const std::vector<double> grid = {0.05, 0.2};
  for (auto branch : {zm::Branch::kRegular, zm::Branch::kSingular}) {
    const auto numeric = zm::integrate_schrodinger(p, 1e-3, grid, branch, 1e-12);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto series = zm::frobenius_start(grid[i], p, branch);
      CHECK(numeric[i].phi == doctest::Approx(series.phi).epsilon(1e-9));
      CHECK(numeric[i].dphi == doctest::Approx(series.dphi).epsilon(1e-9));
    }
  }

  CHECK_THROWS_AS(zm::frobenius_start(60.0, {1.0, 1.0}, zm::Branch::kRegular),
                  zm::ToleranceError);
  CHECK_THROWS_AS(zm::frobenius_start(0.0, p, zm::Branch::kRegular), zm::DomainError);
}

TEST_CASE("Frobenius branches keep a constant Wronskian") {
  auto g = zm::oracle::rng(21);
  const std::vector<double> grid = zm::linspace(0.1, 10.0, 100);
  for (int i = 0; i < 10; ++i) {
    const zm::CoulombParams p{zm::oracle::uniform(g, 0.1, 3.0), zm::oracle::uniform(g, 0.5, 2.0)};
    const auto reg = zm::integrate_schrodinger(p, 1e-3, grid, zm::Branch::kRegular, 1e-12);
    const auto sing = zm::integrate_schrodinger(p, 1e-3, grid, zm::Branch::kSingular, 1e-12);
    const double w0 = zm::wronskian(reg.front(), sing.front());
    CHECK(w0 == doctest::Approx(-0.5).epsilon(1e-6));
    for (std::size_t j = 0; j < grid.size(); ++j) {
      CHECK(std::abs(zm::wronskian(reg[j], sing[j]) - w0) < 1e-6 * std::abs(w0));
    }
  }
}

TEST_CASE("Wronskian profile holds through a strong barrier") {
  const std::vector<double> grid = zm::linspace(0.1, 10.0, 100);
  for (const zm::CoulombParams p : {zm::CoulombParams{10.0, 2.0}, zm::CoulombParams{0.3, 0.5}}) {
    const auto w = zm::wronskian_profile(p, 1e-3, grid, 1e-12);
    REQUIRE(w.size() == grid.size());
    for (double v : w) CHECK(std::abs(v + 0.5) < 1e-10);
  }
  // The double-sample route agrees where the barrier is mild.
  const zm::CoulombParams mild{1.0, 1.0};
  const auto w = zm::wronskian_profile(mild, 1e-3, grid, 1e-12);
  const auto reg = zm::integrate_schrodinger(mild, 1e-3, grid, zm::Branch::kRegular, 1e-12);
  const auto sing = zm::integrate_schrodinger(mild, 1e-3, grid, zm::Branch::kSingular, 1e-12);
  CHECK(std::abs(zm::wronskian(reg[50], sing[50]) - w[50]) < 1e-9);

  CHECK(zm::wronskian_profile(mild, 1e-3, std::vector<double>{}, 1e-12).empty());
  CHECK_THROWS_AS(zm::wronskian_profile(mild, 0.5, grid, 1e-12), zm::DomainError);
  CHECK_THROWS_AS(zm::wronskian_profile(mild, -1.0, grid, 1e-12), zm::DomainError);
}

TEST_CASE("numerical solution satisfies the equation") {
  const zm::CoulombParams p{3.0, 1.2};
  const double h = 1e-3;
  const std::vector<double> grid = zm::linspace(0.5, 12.0, 11501);
  const auto sol = zm::integrate_schrodinger(p, 1e-3, grid, zm::Branch::kSingular, 1e-10);
  double scale = 0.0;
  for (std::size_t i = 0; i < sol.size(); ++i) {
    scale = std::max(scale, std::abs(zm::effective_potential(sol[i].y, p) * sol[i].phi));
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < sol.size(); ++i) {
    const double second = (sol[i + 1].dphi - sol[i - 1].dphi) / (2.0 * h);
    const double from_phi = (sol[i + 1].phi - 2.0 * sol[i].phi + sol[i - 1].phi) / (h * h);
    const double q_phi = zm::effective_potential(sol[i].y, p) * sol[i].phi;
    worst = std::max(worst, std::abs(second + q_phi) / scale);
    worst = std::max(worst, std::abs(from_phi + q_phi) / scale);
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("local amplitude settles at large y") {
  const zm::CoulombParams p{1.0, 1.0};
  const std::vector<double> grid = {50.0, 100.0};
  const auto sol = zm::integrate_schrodinger(p, 1e-3, grid, zm::Branch::kRegular, 1e-11);
  const auto amplitude = [&](const zm::WaveSample& w) {
    const double rate = zm::phase_rate(w.y, p);
    return std::hypot(w.phi, w.dphi / rate);
  };
  const double a50 = amplitude(sol[0]);
  const double a100 = amplitude(sol[1]);
  CHECK(std::abs(a100 - a50) / a50 < 1e-2);
}

TEST_CASE("integrate_schrodinger contract") {
  const zm::CoulombParams p{1.0, 1.0};
  const auto uniform = zm::integrate_schrodinger(p, 1e-3, 2.0, zm::Branch::kRegular, {1e-10, 11});
  REQUIRE(uniform.size() == 11);
  CHECK(uniform.front().y == 1e-3);
  CHECK(uniform.back().y == 2.0);
  const auto start = zm::frobenius_start(1e-3, p, zm::Branch::kRegular);
  CHECK(uniform.front().phi == start.phi);

  CHECK_THROWS_AS(zm::integrate_schrodinger(p, 2.0, 1.0, zm::Branch::kRegular), zm::DomainError);
  CHECK_THROWS_AS(zm::integrate_schrodinger(p, 0.0, 1.0, zm::Branch::kRegular), zm::DomainError);
  CHECK_THROWS_AS(zm::integrate_schrodinger(p, 1e-3, 1.0, zm::Branch::kRegular, {1e-10, 1}),
                  zm::DomainError);
  CHECK_THROWS_AS(zm::integrate_schrodinger(p, 1e-3, 5.0, zm::Branch::kRegular, {1e-30, 5}),
                  zm::ToleranceError);
  CHECK_THROWS_AS(zm::integrate_schrodinger(p, 1e-3, 5.0, zm::Branch::kRegular, {0.0, 5}),
                  zm::ToleranceError);
  const std::vector<double> unordered = {1.0, 0.5};
  CHECK_THROWS_AS(zm::integrate_schrodinger(p, 1e-3, unordered, zm::Branch::kRegular, 1e-10),
                  zm::DomainError);
}

TEST_CASE("propagate_wave runs backward") {
  const zm::CoulombParams p{1.5, 1.0};
  const std::vector<double> forward = {1.0, 6.0};
  const auto there = zm::propagate_wave(p, {1.0, 0.4, -0.2}, forward, 1e-12);
  const std::vector<double> backward = {6.0, 1.0};
  const auto back = zm::propagate_wave(p, there[1], backward, 1e-12);
  CHECK(back[1].phi == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(back[1].dphi == doctest::Approx(-0.2).epsilon(1e-9));
}
