#include "nanores/complex_special.hpp"

#include "nanores/errors.hpp"

namespace nanores {

namespace {

// Enough terms that the first dropped term is below 1e-17 inside each
// series branch's threshold.
constexpr int kJ0Terms = 6;
constexpr int kJ0PrimeTerms = 12;

} // namespace

namespace detail {

// sum_k (-1)^k z^{2k} / (2k+1)!
Complex j0_series(Complex z, int terms) {
  const Complex z2 = z * z;
  Complex term{1.0, 0.0};
  Complex sum = term;
  for (int k = 1; k < terms; ++k) {
    term *= -z2 / static_cast<double>((2 * k) * (2 * k + 1));
    sum += term;
  }
  return sum;
}

// d/dz of the above: sum_{k>=1} (-1)^k 2k z^{2k-1} / (2k+1)!
Complex j0_prime_series(Complex z, int terms) {
  const Complex z2 = z * z;
  // k = 1 term: -2z/3! = -z/3
  Complex power_term = -z / 6.0; // (-1)^k z^{2k-1} / (2k+1)!
  Complex sum = 2.0 * power_term;
  for (int k = 2; k <= terms; ++k) {
    power_term *= -z2 / static_cast<double>((2 * k) * (2 * k + 1));
    sum += static_cast<double>(2 * k) * power_term;
  }
  return sum;
}

Complex j0_direct(Complex z) { return std::sin(z) / z; }

Complex j0_prime_direct(Complex z) { return (z * std::cos(z) - std::sin(z)) / (z * z); }

} // namespace detail

Complex sph_j0(Complex z) {
  if (std::abs(z) < kJ0SeriesThreshold) return detail::j0_series(z, kJ0Terms);
  return detail::j0_direct(z);
}

Complex sph_j0_prime(Complex z) {
  if (std::abs(z) < kJ0PrimeSeriesThreshold) return detail::j0_prime_series(z, kJ0PrimeTerms);
  return detail::j0_prime_direct(z);
}

Complex sph_h0(Complex z) {
  if (z == Complex{}) throw DomainError("sph_h0: pole at z = 0");
  return -kI * std::exp(kI * z) / z;
}

Complex sph_h0_prime(Complex z) {
  if (z == Complex{}) throw DomainError("sph_h0_prime: pole at z = 0");
  return std::exp(kI * z) * (z + kI) / (z * z);
}

Complex principal_sqrt(Complex z) { return std::sqrt(z); }

Complex principal_log(Complex z) {
  if (z == Complex{}) throw DomainError("principal_log: logarithm of zero");
  return std::log(z);
}

} // namespace nanores
