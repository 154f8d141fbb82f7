#pragma once

// The acceptance checks, shared by the `verify` subcommand and the acceptance
// test binary. Each check reports every measured quantity with its tolerance.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace nanores::verification {

struct Measurement {
  std::string name;
  double value = 0.0;     // measured error, slope, or runtime
  double tolerance = 0.0; // bound (or half-width for slopes)
  double target = 0.0;    // expected value for two-sided bounds; 0 otherwise
  bool passed = false;
};

struct CheckResult {
  int id = 0;
  std::string name;
  std::vector<Measurement> measurements;
  double seconds = 0.0;
  double time_limit = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  /// Test hook: multiplies lambda0 in the eigenpair check. 1 leaves it exact.
  double lambda0_scale = 1.0;
  /// Monte Carlo settings for the moment check.
  long long mc_samples = 1'000'000;
  unsigned long long mc_seed = 1;
};

CheckResult check_closed_form_certification();
CheckResult check_solver_agreement();
CheckResult check_limit_eigenpair(const VerifyOptions& opts = {});
CheckResult check_moments(const VerifyOptions& opts = {});
CheckResult check_expansion_coefficients();
CheckResult check_remainder_orders();
CheckResult check_figure_shape();

/// Runs checks 1–7 then appends check 8 (total runtime of the suite).
std::vector<CheckResult> run_all(const VerifyOptions& opts = {});

/// Least-squares slope of log|err| against log h on `points` log-spaced h in [lo, hi].
template <class ErrorFn>
double loglog_slope(ErrorFn&& err, double lo, double hi, int points = 13) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1);
    const double y = std::log(std::abs(err(std::exp(x))));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = points;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace nanores::verification
