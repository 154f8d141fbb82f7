#include <doctest.h>

#include <cmath>
#include <cstring>

#include "nanores/dispersion_solver.hpp"
#include "nanores/errors.hpp"

using namespace nanores;

namespace {

SphereSpec sphere(double r, double eta) { return SphereSpec{r, Complex{eta, 0.0}}; }

} // namespace

TEST_CASE("Newton converges from a perturbed closed-form seed") {
  const SphereSpec spec = sphere(1.0, 3.0);
  const Complex k0 = wave_number_exact(spec, 0);
  const ResonanceMode mode = newton_solve(k0 + Complex{0.1, 0.1}, spec);
  CHECK(std::abs(mode.k - k0) < 1e-12);
  CHECK(mode.source == ModeSource::newton);
  CHECK(mode.branch_m == 0);
  CHECK(mode.dispersion_residual < 1e-13);
  CHECK(mode.lambda == mode.k * mode.k);
}

TEST_CASE("Newton from an exact root returns immediately") {
  const SphereSpec spec = sphere(1.0, 3.0);
  const ResonanceMode mode = newton_solve(wave_number_exact(spec, 0), spec);
  CHECK(mode.iterations <= 2);
  CHECK(mode.dispersion_residual < 1e-14);
}

TEST_CASE("Newton reports failure when the dispersion relation has no roots") {
  const SphereSpec vacuum{1.0, Complex{}};
  CHECK_THROWS_AS(newton_solve(Complex{kPi / 2.0 + 0.1, 0.1}, vacuum), SolverError);
  CHECK_THROWS_AS(scan_branches(vacuum, 0), SolverError);
}

TEST_CASE("solver input validation") {
  const SphereSpec spec = sphere(1.0, 3.0);
  CHECK_THROWS_AS(newton_solve(Complex{}, spec), DomainError);
  CHECK_THROWS_AS(newton_solve(Complex{1.0, 0.0}, spec, SolverConfig{0.0, 60, {}}), DomainError);
  CHECK_THROWS_AS(newton_solve(Complex{1.0, 0.0}, spec, SolverConfig{1e-13, 0, {}}), DomainError);
  CHECK_THROWS_AS(scan_branches(spec, -1), DomainError);
  // A single iteration from a distant seed cannot converge.
  CHECK_THROWS_AS(newton_solve(Complex{1.3, 0.4}, spec, SolverConfig{1e-13, 1, {}}), SolverError);
}

TEST_CASE("branch scan reproduces the closed-form family") {
  const SphereSpec spec = sphere(1.0, 3.0);
  const auto modes = scan_branches(spec, 2);
  REQUIRE(modes.size() == 3);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    CHECK(modes[i].branch_m == static_cast<int>(i));
    CHECK(std::abs(modes[i].k - wave_number_exact(spec, static_cast<int>(i))) < 1e-12);
  }
  for (std::size_t i = 1; i < modes.size(); ++i) {
    CHECK(std::abs(modes[i].k.real() - modes[i - 1].k.real() - kPi / 2.0) < 1e-10);
    CHECK(std::abs(modes[i].k.imag() - modes[0].k.imag()) < 1e-10);
  }
  const auto single = scan_branches(spec, 0);
  REQUIRE(single.size() == 1);
  CHECK(std::abs(single[0].k - resonance_exact(spec, 0).k) < 1e-12);
}

TEST_CASE("oracle agreement and certification over the grid") {
  const SolverConfig cfg;
  for (const double r : {0.5, 1.0, 2.0})
    for (const double eta : {0.5, 1.0, 3.0, 10.0}) {
      const SphereSpec spec = sphere(r, eta);
      const auto modes = scan_branches(spec, 4, cfg);
      REQUIRE(modes.size() == 5);
      for (const auto& mode : modes) {
        CAPTURE(r);
        CAPTURE(eta);
        CAPTURE(mode.branch_m);
        CHECK(std::abs(mode.k - wave_number_exact(spec, mode.branch_m)) < 1e-11);
        CHECK(mode.dispersion_residual < cfg.tol);
        CHECK(mode.interface_residual < 100.0 * cfg.tol);
      }
    }
}

TEST_CASE("solver is deterministic") {
  const SphereSpec spec = sphere(2.0, 10.0);
  const auto a = scan_branches(spec, 3);
  const auto b = scan_branches(spec, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::memcmp(&a[i].k, &b[i].k, sizeof(Complex)) == 0);
    CHECK(a[i].iterations == b[i].iterations);
  }
}
