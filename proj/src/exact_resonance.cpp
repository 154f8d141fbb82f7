#include "nanores/exact_resonance.hpp"

#include <cmath>
#include <string>

#include "nanores/errors.hpp"

namespace nanores {

void SphereSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw DomainError("sphere radius must be positive and finite, got " + std::to_string(radius));
  if (!is_finite(eta)) throw DomainError("susceptibility must be finite");
  if (eta == Complex{}) throw DomainError("no resonance for zero contrast");
  const Complex one_plus = 1.0 + eta;
  if (one_plus.imag() == 0.0 && one_plus.real() <= 0.0)
    throw DomainError("1 + eta lies on the branch cut of the principal square root");
}

Complex SphereSpec::index() const { return principal_sqrt(1.0 + eta); }

void NanoScaling::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("scale h must be positive");
  if (!(eta0 > 0.0) || !std::isfinite(eta0)) throw DomainError("contrast eta0 must be positive");
}

const char* to_string(ModeSource source) {
  switch (source) {
  case ModeSource::closed_form: return "closed_form";
  case ModeSource::newton: return "newton";
  }
  return "unknown";
}

bool ResonanceMode::certified() const {
  return interface_residual < kCertificationThreshold && dispersion_residual < kCertificationThreshold;
}

Complex wave_number_exact(const SphereSpec& spec, int m) {
  spec.validate();
  if (m < 0) throw DomainError("branch index must be non-negative");
  const Complex s = spec.index();
  const Complex decay = principal_log((s + 1.0) / principal_sqrt(spec.eta));
  const Complex k = (kPi / 2.0 + m * kPi - kI * decay) / (spec.radius * s);
  if (!is_finite(k) || !(k.real() > 0.0))
    throw DomainError("susceptibility yields no resonance with positive real wave number");
  return k;
}

ResonanceMode resonance_exact(const SphereSpec& spec, int m) {
  ResonanceMode mode;
  mode.k = wave_number_exact(spec, m);
  mode.lambda = mode.k * mode.k;
  mode.branch_m = m;
  mode.source = ModeSource::closed_form;
  certify(mode, spec);
  return mode;
}

ResonanceMode nanosphere_resonance(const NanoScaling& scaling, int m) {
  scaling.validate();
  return resonance_exact(scaling.sphere(), m);
}

Complex nanosphere_lambda_continued(Complex h, double eta0, int m) {
  if (!(eta0 > 0.0)) throw DomainError("contrast eta0 must be positive");
  const Complex denom = eta0 + h * h;
  if (denom == Complex{}) throw DomainError("h^2 = -eta0 is a pole of the continued resonance");
  const Complex decay = principal_log((principal_sqrt(denom) + h) / std::sqrt(eta0));
  const Complex phase = kPi / 2.0 + m * kPi - kI * decay;
  return phase * phase / denom;
}

Complex interface_residual(Complex k, const SphereSpec& spec) {
  if (k == Complex{}) throw DomainError("interface residual undefined at k = 0");
  const Complex s = spec.index();
  const Complex z = k * spec.radius;
  return s * sph_h0(z) * sph_j0_prime(s * z) - sph_h0_prime(z) * sph_j0(s * z);
}

Complex dispersion_residual(Complex k, const SphereSpec& spec) {
  const Complex s = spec.index();
  const Complex w = k * spec.radius * s;
  return std::sin(w) + kI * s * std::cos(w);
}

Complex dispersion_derivative(Complex k, const SphereSpec& spec) {
  const Complex s = spec.index();
  const Complex w = k * spec.radius * s;
  return spec.radius * s * (std::cos(w) - kI * s * std::sin(w));
}

void certify(ResonanceMode& mode, const SphereSpec& spec) {
  mode.dispersion_residual = std::abs(dispersion_residual(mode.k, spec));
  mode.interface_residual = std::abs(interface_residual(mode.k, spec));
}

ModeCoefficients mode_coefficients(const ResonanceMode& mode, const SphereSpec& spec) {
  if (!mode.certified())
    throw DomainError("mode coefficients requested for an uncertified mode");
  const Complex s = spec.index();
  const Complex z = mode.k * spec.radius;
  const Complex outer = sph_h0(z);
  if (outer == Complex{}) throw DomainError("h0(kr) vanished; exterior amplitude undefined");
  return ModeCoefficients{Complex{1.0, 0.0}, sph_j0(s * z) / outer};
}

Complex evaluate_mode(const ResonanceMode& mode, const SphereSpec& spec, double rho) {
  if (rho < 0.0) throw DomainError("radial coordinate must be non-negative");
  const ModeCoefficients c = mode_coefficients(mode, spec);
  if (rho <= spec.radius) return c.a * sph_j0(mode.k * spec.index() * rho);
  return c.b * sph_h0(mode.k * rho);
}

} // namespace nanores
