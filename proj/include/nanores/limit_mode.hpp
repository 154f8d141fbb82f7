#pragma once

// Limiting (h -> 0) eigenpair of the Newtonian-potential operator on the unit
// ball, eta0 = 1:
//
//   (lambda0 / 4 pi) \int_B u0(y) / |x - y| dy = u0(x),
//   lambda0 = pi^2 / 4,  u0(r) = sin(pi r / 2) / (sqrt(2 pi) r).
//
// For another contrast the eigenvalue rescales as lambda0 / eta0 with the same u0.

#include <functional>
#include <span>

namespace nanores::limit_mode {

using RadialFunction = std::function<double(double)>;

double lambda0();

/// Unit-L2 eigenfunction on the unit ball; throws DomainError outside [0, 1].
double u0(double r);

/// \int_B u0 = 16 / (pi sqrt(2 pi)).
double U0();

/// (1 / 4 pi) lambda0^{5/2} U0^2, the coefficient of -i h in the resonance.
double first_order_coefficient();

/// 4 pi \int_0^1 u0(r)^2 r^2 dr by quadrature (should be 1).
double normalization_integral();

/// 4 pi \int_0^1 u0(r) r^2 dr by quadrature (should be U0()).
double U0_quadrature();

/// \int_B f(|y|) / |x - y| dy at |x| = r for a radial density f:
///   4 pi [ (1/r) \int_0^r s^2 f(s) ds + \int_r^1 s f(s) ds ],
/// and 4 pi \int_0^1 s f(s) ds at r = 0.
double newtonian_potential_radial(const RadialFunction& f, double r);

/// max over the grid of |(lambda / 4 pi) potential(f)(r) - f(r)|. Defaults
/// check the exact eigenpair; other arguments probe sensitivity.
double verify_limit_eigenpair(std::span<const double> grid, double lambda = lambda0(),
                              const RadialFunction& f = u0);

} // namespace nanores::limit_mode
