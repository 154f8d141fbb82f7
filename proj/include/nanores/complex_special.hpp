#pragma once

// Order-zero spherical Bessel/Hankel functions of complex argument and the
// principal-branch elementary functions the resonance formulas are built on.

#include <cmath>
#include <complex>
#include <numbers>

namespace nanores {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// True when both components are finite.
inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Below this modulus j0 is evaluated by its Taylor series.
inline constexpr double kJ0SeriesThreshold = 1e-2;
/// Below this modulus j0' is evaluated by its Taylor series. Larger than the
/// j0 threshold because z cos z - sin z cancels like z^3.
inline constexpr double kJ0PrimeSeriesThreshold = 0.5;

/// j0(z) = sin(z)/z, with j0(0) = 1.
Complex sph_j0(Complex z);

/// j0'(z) = (z cos z - sin z)/z^2, with j0'(0) = 0.
Complex sph_j0_prime(Complex z);

/// h0(z) = -i e^{iz}/z (first kind). Throws DomainError at z = 0.
Complex sph_h0(Complex z);

/// h0'(z) = e^{iz}(z + i)/z^2. Throws DomainError at z = 0.
Complex sph_h0_prime(Complex z);

/// Principal square root, Re >= 0, cut along the negative reals.
Complex principal_sqrt(Complex z);

/// Principal logarithm, Im in (-pi, pi]. Throws DomainError at z = 0.
Complex principal_log(Complex z);

namespace detail {

// Raw evaluation branches, exposed for the series/direct agreement tests.
Complex j0_series(Complex z, int terms);
Complex j0_prime_series(Complex z, int terms);
Complex j0_direct(Complex z);
Complex j0_prime_direct(Complex z);

} // namespace detail

} // namespace nanores
