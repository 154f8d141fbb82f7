#pragma once

// Closed-form radially symmetric resonances of a homogeneous dielectric ball in
// vacuum, plus the two residuals used to certify any candidate wave number:
//
//   F(k) = s h0(kr) j0'(ksr) - h0'(kr) j0(ksr)      (interface matching)
//   G(k) = sin(krs) + i s cos(krs)                  (entire reduction)
//
// with s = sqrt(1 + eta). The two are related by F = -e^{ikr} G / (s (kr)^2),
// so they share their zero set away from k = 0.

#include "nanores/complex_special.hpp"

namespace nanores {

/// Homogeneous ball of radius `radius` and susceptibility `eta`.
struct SphereSpec {
  double radius = 1.0;
  Complex eta{1.0, 0.0};

  /// Throws DomainError unless radius > 0, eta != 0 is finite and 1 + eta is off the cut.
  void validate() const;
  /// s = sqrt(1 + eta), principal branch.
  Complex index() const;
};

/// High-contrast scaling: a ball of radius h with eta = eta0 / h^2.
struct NanoScaling {
  double h = 0.1;
  double eta0 = 1.0;

  void validate() const;
  double eta() const { return eta0 / (h * h); }
  SphereSpec sphere() const { return SphereSpec{h, Complex{eta(), 0.0}}; }
};

enum class ModeSource { closed_form, newton };

const char* to_string(ModeSource source);

struct ResonanceMode {
  Complex k;
  Complex lambda; // k^2
  int branch_m = 0;
  double interface_residual = 0.0;  // |F(k)|
  double dispersion_residual = 0.0; // |G(k)|
  ModeSource source = ModeSource::closed_form;
  int iterations = 0; // Newton iterations; 0 for closed forms

  /// Both residuals below kCertificationThreshold.
  bool certified() const;
};

/// Absolute residual bound for a mode to count as a resonance.
inline constexpr double kCertificationThreshold = 1e-9;

/// k^(m) = (pi/2 + m pi - i log((s + 1)/sqrt(eta))) / (r s).
Complex wave_number_exact(const SphereSpec& spec, int m = 0);

/// Mode with lambda = k^2 and both residuals filled in.
ResonanceMode resonance_exact(const SphereSpec& spec, int m = 0);

/// resonance_exact on SphereSpec{h, eta0/h^2}.
ResonanceMode nanosphere_resonance(const NanoScaling& scaling, int m = 0);

/// The nanosphere resonance as an analytic function of a complex scale h:
///   (pi/2 + m pi - i log((sqrt(eta0 + h^2) + h)/sqrt(eta0)))^2 / (eta0 + h^2).
/// Agrees with nanosphere_resonance for real h > 0 and is analytic for |h| < sqrt(eta0).
Complex nanosphere_lambda_continued(Complex h, double eta0 = 1.0, int m = 0);

Complex interface_residual(Complex k, const SphereSpec& spec);
Complex dispersion_residual(Complex k, const SphereSpec& spec);
/// dG/dk = r s (cos(krs) - i s sin(krs)).
Complex dispersion_derivative(Complex k, const SphereSpec& spec);

/// Fills interface/dispersion residuals of `mode` for `spec`.
void certify(ResonanceMode& mode, const SphereSpec& spec);

struct ModeCoefficients {
  Complex a{1.0, 0.0}; // interior amplitude (normalization)
  Complex b;           // exterior amplitude
};

/// A = 1, B = j0(ksr)/h0(kr). Throws DomainError for uncertified modes.
ModeCoefficients mode_coefficients(const ResonanceMode& mode, const SphereSpec& spec);

/// A j0(k s rho) inside the ball, B h0(k rho) outside.
Complex evaluate_mode(const ResonanceMode& mode, const SphereSpec& spec, double rho);

} // namespace nanores
