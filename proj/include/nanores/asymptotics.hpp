#pragma once

// Small-h expansion of the high-contrast nanosphere resonance (eta0 = 1):
//
//   lambda_h = R0(h) + R1(h) + R2(h),
//   R0(h) = lambda0 - i (1/4pi) lambda0^{5/2} U0^2 h = pi^2/4 - i pi h,
//   R1(h) = -(1/4pi) lambda0^2 sum_{k>=2} lambda0^{k/2} (ih)^k / k! M_{k-1},
//   R2(h) = whatever of the exact resonance R0 + R1 leaves over.

#include <span>
#include <vector>

#include "nanores/ball_moments.hpp"
#include "nanores/complex_special.hpp"

namespace nanores {

struct SeriesTerm {
  int power = 0;
  Complex value;
};

/// Truncated power series in h.
struct ExpansionSeries {
  std::vector<SeriesTerm> terms; // strictly increasing powers
  int truncation_order = 0;

  /// Coefficient of h^power, zero when absent.
  Complex coefficient(int power) const;
  Complex evaluate(Complex h) const;
  /// Throws DomainError unless powers are strictly increasing, non-negative and <= truncation_order.
  void validate() const;
};

/// Termwise difference a - b over the union of powers.
ExpansionSeries subtract(const ExpansionSeries& a, const ExpansionSeries& b);

/// {(0, pi^2/4), (1, -i pi)}.
ExpansionSeries r0_series();

/// Coefficients of h^2..h^max_order from moments M_1..M_{max_order-1}.
/// Throws UnsupportedError when a required moment is missing.
ExpansionSeries r1_series(int max_order, std::span<const MomentEstimate> moments);

/// Closed forms for n = 1, 2, quadrature (order 64) for n >= 3.
std::vector<MomentEstimate> default_moments(int max_n);

/// Highest Taylor order taylor_exact will produce.
inline constexpr int kMaxTaylorOrder = 8;

/// Taylor coefficients of the exact nanosphere resonance at h = 0, computed
/// numerically as Cauchy integrals (trapezoidal rule on |h| = 1/2, where the
/// continued resonance is analytic). Throws UnsupportedError past kMaxTaylorOrder.
ExpansionSeries taylor_exact(int order);

/// R2 coefficients for powers 2..order: taylor_exact - R0 - R1.
ExpansionSeries r2_coeffs(int order = 3);

/// lambda_h - R0(h) - R1(h), with R1 truncated at h^r1_order.
Complex r2_extract(double h, int r1_order = 3);

/// Exact nanosphere resonance (eta0 = 1, m = 0).
Complex exact_lambda(double h);

enum class ApproxLevel { R0, R0R1, R0R1R2 };

/// Partial sums with R1 and R2 truncated at h^3.
Complex approx_lambda(double h, ApproxLevel level);

struct FigureRow {
  double h = 0.0;
  Complex exact;
  Complex r0;
  Complex r0r1;
  Complex r0r1r2;
};

/// `steps` linearly spaced h in [h_min, h_max]; requires 0 < h_min < h_max < 1, steps >= 2.
std::vector<FigureRow> figure_rows(double h_min = 0.01, double h_max = 0.5, int steps = 100);

} // namespace nanores
