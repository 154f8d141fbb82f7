#include "nanores/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "nanores/asymptotics.hpp"
#include "nanores/ball_moments.hpp"
#include "nanores/dispersion_solver.hpp"
#include "nanores/exact_resonance.hpp"
#include "nanores/limit_mode.hpp"

namespace nanores::verification {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kRadii[] = {0.5, 1.0, 2.0};
constexpr double kEtas[] = {0.5, 1.0, 3.0, 10.0};
constexpr int kBranches = 3; // m = 0, 1, 2

Measurement below(std::string name, double value, double tol) {
  return {std::move(name), value, tol, 0.0, value < tol};
}

Measurement near(std::string name, double value, double target, double half_width) {
  return {std::move(name), value, half_width, target, std::abs(value - target) <= half_width};
}

// Wraps a body that fills measurements; adds the runtime bound and the verdict.
template <class Body>
CheckResult timed(int id, std::string name, double time_limit, Body&& body) {
  CheckResult result;
  result.id = id;
  result.name = std::move(name);
  result.time_limit = time_limit;
  const auto start = Clock::now();
  body(result.measurements);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.measurements.push_back(below("runtime_seconds", result.seconds, time_limit));
  result.passed = std::all_of(result.measurements.begin(), result.measurements.end(),
                              [](const Measurement& m) { return m.passed; });
  return result;
}

} // namespace

CheckResult check_closed_form_certification() {
  return timed(1, "closed_form_certification", 1.0, [](std::vector<Measurement>& out) {
    double worst_g = 0.0, worst_f = 0.0;
    for (const double r : kRadii)
      for (const double eta : kEtas)
        for (int m = 0; m < kBranches; ++m) {
          const SphereSpec spec{r, Complex{eta, 0.0}};
          const Complex k = wave_number_exact(spec, m);
          worst_g = std::max(worst_g, std::abs(dispersion_residual(k, spec)));
          worst_f = std::max(worst_f, std::abs(interface_residual(k, spec)));
        }
    out.push_back(below("max_abs_G", worst_g, 1e-12));
    out.push_back(below("max_abs_F", worst_f, 1e-10));
  });
}

CheckResult check_solver_agreement() {
  return timed(2, "solver_closed_form_agreement", 1.0, [](std::vector<Measurement>& out) {
    double worst = 0.0;
    for (const double r : kRadii)
      for (const double eta : kEtas) {
        const SphereSpec spec{r, Complex{eta, 0.0}};
        const auto modes = scan_branches(spec, kBranches - 1);
        for (const auto& mode : modes)
          worst = std::max(worst, std::abs(mode.k - wave_number_exact(spec, mode.branch_m)));
      }
    out.push_back(below("max_abs_newton_minus_closed_form", worst, 1e-11));
  });
}

CheckResult check_limit_eigenpair(const VerifyOptions& opts) {
  return timed(3, "limit_eigenpair", 1.0, [&opts](std::vector<Measurement>& out) {
    std::vector<double> grid(33);
    for (int i = 0; i < 33; ++i) grid[static_cast<std::size_t>(i)] = (i + 1) / 33.0;
    const double lambda = limit_mode::lambda0() * opts.lambda0_scale;
    out.push_back(below("eigenpair_residual", limit_mode::verify_limit_eigenpair(grid, lambda), 1e-10));
    out.push_back(below("normalization_error", std::abs(limit_mode::normalization_integral() - 1.0), 1e-12));
    const double u = limit_mode::U0();
    const double first_order = std::pow(lambda, 2.5) * u * u / (4.0 * kPi);
    out.push_back(below("first_order_coefficient_minus_pi", std::abs(first_order - kPi), 1e-12));
  });
}

CheckResult check_moments(const VerifyOptions& opts) {
  return timed(4, "ball_moments", 10.0, [&opts](std::vector<Measurement>& out) {
    const double exact1 = 128.0 / std::pow(kPi, 3);
    const double exact2 = 768.0 / std::pow(kPi, 5) * (kPi * kPi - 8.0);
    out.push_back(below("quadrature_M1_error", std::abs(moment_quadrature(1, 64).value - exact1), 1e-10));
    out.push_back(below("quadrature_M2_error", std::abs(moment_quadrature(2, 64).value - exact2), 1e-10));
    const auto mc1 = moment_monte_carlo(1, opts.mc_samples, opts.mc_seed);
    const auto mc2 = moment_monte_carlo(2, opts.mc_samples, opts.mc_seed);
    out.push_back(below("monte_carlo_M1_sigmas", std::abs(mc1.value - exact1) / mc1.std_error, 3.0));
    out.push_back(below("monte_carlo_M2_sigmas", std::abs(mc2.value - exact2) / mc2.std_error, 3.0));
  });
}

CheckResult check_expansion_coefficients() {
  return timed(5, "expansion_coefficients", 1.0, [](std::vector<Measurement>& out) {
    const double pi = kPi, pi2 = pi * pi, pi3 = pi2 * pi;
    const auto r1 = r1_series(3, default_moments(2));
    const auto r2 = r2_coeffs(3);
    const auto taylor = taylor_exact(4);
    out.push_back(below("R1_h2_error", std::abs(r1.coefficient(2) - Complex{pi2 / 4.0, 0.0}), 1e-12));
    out.push_back(below("R1_h3_error", std::abs(r1.coefficient(3) - Complex{0.0, pi3 / 4.0 - 2.0 * pi}), 1e-12));
    out.push_back(below("R2_h2_error", std::abs(r2.coefficient(2) - Complex{-1.0 - pi2 / 2.0, 0.0}), 1e-12));
    out.push_back(
        below("R2_h3_error", std::abs(r2.coefficient(3) - Complex{0.0, 19.0 * pi / 6.0 - pi3 / 4.0}), 1e-12));
    const Complex expected[] = {{pi2 / 4.0, 0.0},
                                {0.0, -pi},
                                {-1.0 - pi2 / 4.0, 0.0},
                                {0.0, 7.0 * pi / 6.0},
                                {4.0 / 3.0 + pi2 / 4.0, 0.0}};
    for (int p = 0; p <= 4; ++p)
      out.push_back(below("taylor_h" + std::to_string(p) + "_error",
                          std::abs(taylor.coefficient(p) - expected[p]), 1e-8));
  });
}

CheckResult check_remainder_orders() {
  return timed(6, "remainder_orders", 1.0, [](std::vector<Measurement>& out) {
    const double first = loglog_slope([](double h) { return exact_lambda(h) - approx_lambda(h, ApproxLevel::R0); },
                                      1e-4, 1e-1);
    const double third = loglog_slope(
        [](double h) { return exact_lambda(h) - approx_lambda(h, ApproxLevel::R0R1R2); }, 3e-3, 3e-2);
    out.push_back(near("slope_exact_minus_R0", first, 2.0, 0.1));
    out.push_back(near("slope_exact_minus_R0R1R2", third, 4.0, 0.2));
  });
}

CheckResult check_figure_shape() {
  return timed(7, "figure_imag_improves_real_does_not", 1.0, [](std::vector<Measurement>& out) {
    int imag_violations = 0, real_violations = 0;
    for (const auto& row : figure_rows()) {
      const double im_r0 = std::abs(row.exact.imag() - row.r0.imag());
      const double im_r0r1 = std::abs(row.exact.imag() - row.r0r1.imag());
      const double re_r0 = std::abs(row.exact.real() - row.r0.real());
      const double re_r0r1 = std::abs(row.exact.real() - row.r0r1.real());
      if (!(im_r0r1 < im_r0)) ++imag_violations;
      if (re_r0r1 < re_r0) ++real_violations;
    }
    out.push_back(below("rows_where_R1_does_not_improve_imag", imag_violations, 0.5));
    out.push_back(below("rows_where_R1_improves_real", real_violations, 0.5));
  });
}

std::vector<CheckResult> run_all(const VerifyOptions& opts) {
  const auto start = Clock::now();
  std::vector<CheckResult> results;
  results.push_back(check_closed_form_certification());
  results.push_back(check_solver_agreement());
  results.push_back(check_limit_eigenpair(opts));
  results.push_back(check_moments(opts));
  results.push_back(check_expansion_coefficients());
  results.push_back(check_remainder_orders());
  results.push_back(check_figure_shape());

  CheckResult suite;
  suite.id = 8;
  suite.name = "full_suite";
  suite.time_limit = 30.0;
  suite.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool all_green =
      std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  suite.measurements.push_back(below("failed_checks", all_green ? 0.0 : 1.0, 0.5));
  suite.measurements.push_back(below("runtime_seconds", suite.seconds, suite.time_limit));
  suite.passed = suite.measurements[0].passed && suite.measurements[1].passed;
  results.push_back(std::move(suite));
  return results;
}

} // namespace nanores::verification
