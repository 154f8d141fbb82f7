#include "nanores/limit_mode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nanores/errors.hpp"
#include "nanores/quadrature.hpp"

namespace nanores::limit_mode {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPotentialTol = 1e-15;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

} // namespace

double lambda0() { return kPi * kPi / 4.0; }

double u0(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("u0 is defined on [0, 1] only");
  const double theta = 0.5 * kPi * r;
  // sin(theta)/theta; series below 1e-4 where the quotient loses digits.
  double sinc;
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    sinc = 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  } else {
    sinc = std::sin(theta) / theta;
  }
  return kInvSqrt2Pi * 0.5 * kPi * sinc;
}

double U0() { return 16.0 / (kPi * std::sqrt(2.0 * kPi)); }

double first_order_coefficient() {
  const double u = U0();
  return std::pow(lambda0(), 2.5) * u * u / (4.0 * kPi);
}

double normalization_integral() {
  return 4.0 * kPi * integrate_adaptive([](double r) { return u0(r) * u0(r) * r * r; }, 0.0, 1.0);
}

double U0_quadrature() {
  return 4.0 * kPi * integrate_adaptive([](double r) { return u0(r) * r * r; }, 0.0, 1.0);
}

double newtonian_potential_radial(const RadialFunction& f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("potential radius must lie in [0, 1]");
  const auto shell = [&f](double s) { return s * f(s); };
  if (r == 0.0) return 4.0 * kPi * integrate_adaptive(shell, 0.0, 1.0, kPotentialTol);
  const double inner = integrate_adaptive([&f](double s) { return s * s * f(s); }, 0.0, r, kPotentialTol);
  const double outer = integrate_adaptive(shell, r, 1.0, kPotentialTol);
  return 4.0 * kPi * (inner / r + outer);
}

double verify_limit_eigenpair(std::span<const double> grid, double lambda, const RadialFunction& f) {
  double worst = 0.0;
  for (const double r : grid) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("eigenpair grid points must lie in (0, 1]");
    const double lhs = lambda / (4.0 * kPi) * newtonian_potential_radial(f, r);
    worst = std::max(worst, std::abs(lhs - f(r)));
  }
  return worst;
}

} // namespace nanores::limit_mode
