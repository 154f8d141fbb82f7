#include <doctest.h>

#include <cmath>
#include <string>

#include "nanores/errors.hpp"
#include "nanores/exact_resonance.hpp"
#include "nanores/verification.hpp"

using namespace nanores;

namespace {

constexpr double kRadii[] = {0.5, 1.0, 2.0};
constexpr double kEtas[] = {0.5, 1.0, 3.0, 10.0};

SphereSpec sphere(double r, double eta) { return SphereSpec{r, Complex{eta, 0.0}}; }

// Nanosphere closed form evaluated in real arithmetic: for real eta the log argument is real and positive.
Complex nanosphere_lambda_real(double h, double eta0) {
  const double eta = eta0 / (h * h);
  const double decay = std::log((std::sqrt(eta + 1.0) + 1.0) / std::sqrt(eta));
  const Complex phase{kPi / 2.0, -decay};
  return phase * phase / (eta0 + h * h);
}

// eta0 = 1 simplification with the inverse sine read as asinh.
Complex simplified_lambda(double h) {
  const double a = std::asinh(h);
  const double d = h * h + 1.0;
  return Complex{kPi * kPi / (4.0 * d) - a * a / d, -kPi * a / d};
}

} // namespace

TEST_CASE("wave number examples") {
  const Complex k0 = wave_number_exact(sphere(1.0, 3.0), 0);
  CHECK(std::abs(k0 - Complex{kPi / 4.0, -std::log(std::sqrt(3.0)) / 2.0}) < 1e-15);

  const Complex k1 = wave_number_exact(sphere(1.0, 3.0), 1);
  CHECK(std::abs(k1 - Complex{3.0 * kPi / 4.0, -std::log(std::sqrt(3.0)) / 2.0}) < 1e-15);
  CHECK(std::abs(dispersion_residual(k1, sphere(1.0, 3.0))) < 1e-12);

  for (const double h : {0.01, 0.2, 0.5, 0.9}) {
    const Complex k = wave_number_exact(sphere(h, 1.0 / (h * h)), 0);
    const double d = std::sqrt(h * h + 1.0);
    CHECK(std::abs(k - Complex{kPi / (2.0 * d), -std::asinh(h) / d}) < 1e-14);
  }
}

TEST_CASE("resonance is the square of the wave number") {
  const ResonanceMode mode = resonance_exact(sphere(1.0, 3.0), 0);
  const Complex k0{kPi / 4.0, -std::log(std::sqrt(3.0)) / 2.0};
  CHECK(std::abs(mode.lambda - k0 * k0) < 1e-15);
  CHECK(mode.lambda == mode.k * mode.k);
  CHECK(mode.source == ModeSource::closed_form);
  CHECK(mode.certified());
}

TEST_CASE("closed forms zero both residuals on the grid") {
  for (const double r : kRadii)
    for (const double eta : kEtas)
      for (int m = 0; m <= 2; ++m) {
        const ResonanceMode mode = resonance_exact(sphere(r, eta), m);
        CAPTURE(r);
        CAPTURE(eta);
        CAPTURE(m);
        CHECK(mode.dispersion_residual < 1e-12);
        CHECK(mode.interface_residual < 1e-10);
        CHECK(mode.k.real() > 0.0);
        CHECK(mode.k.imag() < 0.0);
      }
}

TEST_CASE("F and G are proportional: F = -e^{ikr} G / (s (kr)^2)") {
  const SphereSpec spec = sphere(1.3, 2.2);
  const Complex s = spec.index();
  for (const Complex k : {Complex{1.0, 0.0}, Complex{0.4, -0.7}, Complex{2.2, 0.3}, Complex{-1.5, -0.2}}) {
    const Complex z = k * spec.radius;
    const Complex predicted = -std::exp(kI * z) * dispersion_residual(k, spec) / (s * z * z);
    CHECK(std::abs(interface_residual(k, spec) - predicted) < 1e-13 * std::max(1.0, std::abs(predicted)));
  }
}

TEST_CASE("off-resonance residual is large and matches the frozen value") {
  // Frozen from a 40-digit evaluation of the Bessel/Hankel form.
  const Complex f = interface_residual(Complex{1.0, 0.0}, sphere(1.0, 3.0));
  CHECK(std::abs(f) > 1e-3);
  CHECK(std::abs(f - Complex{-0.59582323659095557, -0.15772860525099342}) < 1e-13);
  CHECK_THROWS_AS(interface_residual(Complex{}, sphere(1.0, 3.0)), DomainError);
}

TEST_CASE("dispersion function has no roots without contrast or on the real axis") {
  const SphereSpec vacuum{1.0, Complex{}};
  for (const Complex k : {Complex{0.3, 0.0}, Complex{1.0, -2.0}, Complex{-4.0, 1.5}}) {
    // G = sin + i cos = i e^{-ikr}, modulus e^{Im(kr)}.
    CHECK(std::abs(dispersion_residual(k, vacuum) - kI * std::exp(-kI * k)) < 1e-14);
    CHECK(std::abs(std::abs(dispersion_residual(k, vacuum)) - std::exp(k.imag())) < 1e-14);
  }
  for (const double eta : kEtas)
    for (double k = -20.0; k <= 20.0; k += 0.01)
      CHECK(std::abs(dispersion_residual(Complex{k, 0.0}, sphere(1.0, eta))) >= 1.0 - 1e-12);
}

TEST_CASE("scaling law: k r depends on eta and m only") {
  for (const double eta : kEtas)
    for (int m = 0; m <= 2; ++m) {
      const Complex ref = wave_number_exact(sphere(1.0, eta), m);
      for (const double r : {0.1, 10.0})
        CHECK(std::abs(wave_number_exact(sphere(r, eta), m) * r - ref) < 1e-14 * std::abs(ref));
    }
}

TEST_CASE("nanosphere closed form") {
  SUBCASE("matches the sphere formula and the real-arithmetic form") {
    for (const double eta0 : {1.0, 2.0, 0.3})
      for (const double h : {1e-3, 0.1, 0.5, 0.9}) {
        const ResonanceMode nano = nanosphere_resonance(NanoScaling{h, eta0}, 0);
        const ResonanceMode ball = resonance_exact(sphere(h, eta0 / (h * h)), 0);
        CHECK(nano.lambda == ball.lambda);
        CHECK(std::abs(nano.lambda - nanosphere_lambda_real(h, eta0)) < 1e-13);
      }
  }
  SUBCASE("eta0 = 1 simplification with asinh") {
    for (const double h : {1e-4, 0.01, 0.25, 0.5, 0.75}) {
      const Complex lambda = nanosphere_resonance(NanoScaling{h, 1.0}, 0).lambda;
      CHECK(std::abs(lambda - simplified_lambda(h)) < 1e-14);
    }
    const Complex phase{kPi / 2.0, -std::asinh(0.5)};
    CHECK(std::abs(nanosphere_resonance(NanoScaling{0.5, 1.0}, 0).lambda - phase * phase / 1.25) < 1e-14);
  }
  SUBCASE("the arcsin reading of the simplification is a different function") {
    const double h = 0.5;
    const double a = std::asin(h);
    const double d = h * h + 1.0;
    const Complex arcsin_reading{kPi * kPi / (4.0 * d) - a * a / d, -kPi * a / d};
    CHECK(std::abs(nanosphere_resonance(NanoScaling{h, 1.0}, 0).lambda - arcsin_reading) > 1e-2);
  }
  SUBCASE("h -> 0 limit is pi^2/4") {
    CHECK(std::abs(nanosphere_resonance(NanoScaling{1e-8, 1.0}, 0).lambda - Complex{kPi * kPi / 4.0, 0.0}) < 1e-6);
  }
  SUBCASE("first-order remainder is O(h^2)") {
    const double slope = verification::loglog_slope(
        [](double h) {
          return nanosphere_resonance(NanoScaling{h, 1.0}, 0).lambda - Complex{kPi * kPi / 4.0, -kPi * h};
        },
        1e-4, 1e-1);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
  }
  SUBCASE("analytic continuation agrees on the real axis") {
    for (const double eta0 : {1.0, 2.5})
      for (const double h : {0.05, 0.3, 0.8})
        CHECK(std::abs(nanosphere_lambda_continued(Complex{h, 0.0}, eta0) -
                       nanosphere_resonance(NanoScaling{h, eta0}, 0).lambda) < 1e-13);
  }
}

TEST_CASE("invalid scatterers are rejected") {
  try {
    wave_number_exact(sphere(1.0, 0.0), 0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "no resonance for zero contrast");
  }
  CHECK_THROWS_AS(wave_number_exact(sphere(0.0, 1.0), 0), DomainError);
  CHECK_THROWS_AS(wave_number_exact(sphere(-1.0, 1.0), 0), DomainError);
  CHECK_THROWS_AS(wave_number_exact(sphere(1.0, -2.0), 0), DomainError);
  CHECK_THROWS_AS(wave_number_exact(sphere(1.0, 1.0), -1), DomainError);
  CHECK_THROWS_AS(nanosphere_resonance(NanoScaling{0.0, 1.0}, 0), DomainError);
  CHECK_THROWS_AS(nanosphere_resonance(NanoScaling{0.1, -1.0}, 0), DomainError);
}

TEST_CASE("complex contrast off the cuts is accepted") {
  const SphereSpec lossy{1.0, Complex{3.0, 0.5}};
  const ResonanceMode mode = resonance_exact(lossy, 0);
  CHECK(mode.certified());
  CHECK(mode.k.real() > 0.0);
}

TEST_CASE("mode coefficients and field continuity") {
  const SphereSpec spec = sphere(1.0, 3.0);
  const ResonanceMode mode = resonance_exact(spec, 0);
  const ModeCoefficients c = mode_coefficients(mode, spec);
  const Complex s = spec.index();
  CHECK(c.a == Complex{1.0, 0.0});
  // Frozen from a 40-digit evaluation at the closed-form root.
  CHECK(std::abs(c.b - Complex{0.31020161970069987, 0.31020161970069987}) < 1e-14);
  CHECK(std::abs(c.a * sph_j0(mode.k * s * spec.radius) - c.b * sph_h0(mode.k * spec.radius)) < 1e-15);

  for (const double r : kRadii)
    for (const double eta : kEtas)
      for (int m = 0; m <= 2; ++m) {
        const SphereSpec sp = sphere(r, eta);
        const ResonanceMode md = resonance_exact(sp, m);
        const ModeCoefficients cf = mode_coefficients(md, sp);
        const Complex z = md.k * r;
        const Complex sp_index = sp.index();
        CHECK(std::abs(sp_index * cf.a * sph_j0_prime(sp_index * z) - cf.b * sph_h0_prime(z)) < 1e-10);
      }

  ResonanceMode bogus = mode;
  bogus.k += 0.1;
  certify(bogus, spec);
  CHECK_THROWS_AS(mode_coefficients(bogus, spec), DomainError);
}

TEST_CASE("evaluate_mode: bounded centre, continuous value and slope at the surface") {
  for (const double r : kRadii)
    for (const double eta : kEtas) {
      const SphereSpec spec = sphere(r, eta);
      const ResonanceMode mode = resonance_exact(spec, 0);
      CHECK(evaluate_mode(mode, spec, 0.0) == Complex{1.0, 0.0});

      const double below = std::nextafter(r, 0.0);
      const double above = std::nextafter(r, 2.0 * r);
      CHECK(std::abs(evaluate_mode(mode, spec, below) - evaluate_mode(mode, spec, above)) < 1e-12);

      // Central differences of each side's expression, taken at rho = r.
      const ModeCoefficients c = mode_coefficients(mode, spec);
      const Complex s = spec.index();
      const auto inside = [&](double rho) { return c.a * sph_j0(mode.k * s * rho); };
      const auto outside = [&](double rho) { return c.b * sph_h0(mode.k * rho); };
      const double d = 1e-5 * r;
      const Complex d_in = (inside(r + d) - inside(r - d)) / (2.0 * d);
      const Complex d_out = (outside(r + d) - outside(r - d)) / (2.0 * d);
      CHECK(std::abs(d_in - d_out) < 1e-9);
    }
}
