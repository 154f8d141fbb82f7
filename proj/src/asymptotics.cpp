#include "nanores/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "nanores/errors.hpp"
#include "nanores/exact_resonance.hpp"
#include "nanores/limit_mode.hpp"

namespace nanores {

namespace {

constexpr int kTruncation = 3;
constexpr int kCauchyPoints = 128;
constexpr double kCauchyRadius = 0.5; // continued resonance has branch points at h = +-i

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

} // namespace

Complex ExpansionSeries::coefficient(int power) const {
  for (const auto& t : terms)
    if (t.power == power) return t.value;
  return {};
}

Complex ExpansionSeries::evaluate(Complex h) const {
  Complex sum{};
  for (const auto& t : terms) sum += t.value * std::pow(h, t.power);
  return sum;
}

void ExpansionSeries::validate() const {
  int previous = -1;
  for (const auto& t : terms) {
    if (t.power <= previous) throw DomainError("series powers must be strictly increasing and non-negative");
    if (t.power > truncation_order) throw DomainError("series term beyond truncation order");
    previous = t.power;
  }
}

ExpansionSeries subtract(const ExpansionSeries& a, const ExpansionSeries& b) {
  std::map<int, Complex> merged;
  for (const auto& t : a.terms) merged[t.power] += t.value;
  for (const auto& t : b.terms) merged[t.power] -= t.value;
  ExpansionSeries out;
  out.truncation_order = std::max(a.truncation_order, b.truncation_order);
  for (const auto& [power, value] : merged) out.terms.push_back({power, value});
  return out;
}

ExpansionSeries r0_series() {
  return ExpansionSeries{{{0, Complex{limit_mode::lambda0(), 0.0}},
                          {1, Complex{0.0, -limit_mode::first_order_coefficient()}}},
                         1};
}

ExpansionSeries r1_series(int max_order, std::span<const MomentEstimate> moments) {
  if (max_order < 2) throw UnsupportedError("R1 starts at h^2; max_order must be >= 2");
  const double lambda0 = limit_mode::lambda0();
  ExpansionSeries series;
  series.truncation_order = max_order;
  for (int k = 2; k <= max_order; ++k) {
    const auto it = std::find_if(moments.begin(), moments.end(), [k](const MomentEstimate& m) { return m.n == k - 1; });
    if (it == moments.end())
      throw UnsupportedError("R1 coefficient of h^" + std::to_string(k) + " needs moment M_" + std::to_string(k - 1));
    static constexpr Complex kIPowers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const Complex i_power = kIPowers[k % 4];
    const double magnitude = std::pow(lambda0, 2.0 + 0.5 * k) / (4.0 * kPi * factorial(k)) * it->value;
    series.terms.push_back({k, -magnitude * i_power});
  }
  return series;
}

std::vector<MomentEstimate> default_moments(int max_n) {
  std::vector<MomentEstimate> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(n <= 2 ? moment_closed_form(n) : moment_quadrature(n, 64));
  return out;
}

ExpansionSeries taylor_exact(int order) {
  if (order < 0 || order > kMaxTaylorOrder)
    throw UnsupportedError("Taylor order must lie in [0, " + std::to_string(kMaxTaylorOrder) + "]");
  std::vector<Complex> samples(kCauchyPoints);
  for (int j = 0; j < kCauchyPoints; ++j) {
    const Complex h = std::polar(kCauchyRadius, 2.0 * kPi * j / kCauchyPoints);
    samples[static_cast<std::size_t>(j)] = nanosphere_lambda_continued(h, 1.0, 0);
  }
  ExpansionSeries series;
  series.truncation_order = order;
  for (int k = 0; k <= order; ++k) {
    Complex sum{};
    for (int j = 0; j < kCauchyPoints; ++j)
      sum += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * kPi * k * j / kCauchyPoints);
    series.terms.push_back({k, sum / (kCauchyPoints * std::pow(kCauchyRadius, k))});
  }
  return series;
}

ExpansionSeries r2_coeffs(int order) {
  if (order < 2) throw UnsupportedError("R2 starts at h^2; order must be >= 2");
  const auto moments = default_moments(order - 1);
  const ExpansionSeries rest = subtract(subtract(taylor_exact(order), r0_series()), r1_series(order, moments));
  ExpansionSeries series;
  series.truncation_order = order;
  for (const auto& t : rest.terms)
    if (t.power >= 2) series.terms.push_back(t);
  return series;
}

Complex exact_lambda(double h) { return nanosphere_resonance(NanoScaling{h, 1.0}, 0).lambda; }

Complex r2_extract(double h, int r1_order) {
  if (!(h > 0.0)) throw DomainError("h must be positive");
  const auto moments = default_moments(r1_order - 1);
  return exact_lambda(h) - r0_series().evaluate(h) - r1_series(r1_order, moments).evaluate(h);
}

Complex approx_lambda(double h, ApproxLevel level) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("h must lie in (0, 1)");
  static const ExpansionSeries r0 = r0_series();
  static const ExpansionSeries r1 = r1_series(kTruncation, default_moments(kTruncation - 1));
  static const ExpansionSeries r2 = r2_coeffs(kTruncation);
  Complex value = r0.evaluate(h);
  if (level == ApproxLevel::R0) return value;
  value += r1.evaluate(h);
  if (level == ApproxLevel::R0R1) return value;
  return value + r2.evaluate(h);
}

std::vector<FigureRow> figure_rows(double h_min, double h_max, int steps) {
  if (!(h_min > 0.0 && h_min < h_max && h_max < 1.0)) throw DomainError("figure range needs 0 < h_min < h_max < 1");
  if (steps < 2) throw DomainError("figure needs at least 2 steps");
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double h = (i == steps - 1) ? h_max : h_min + (h_max - h_min) * i / (steps - 1);
    rows.push_back({h, exact_lambda(h), approx_lambda(h, ApproxLevel::R0), approx_lambda(h, ApproxLevel::R0R1),
                    approx_lambda(h, ApproxLevel::R0R1R2)});
  }
  return rows;
}

} // namespace nanores
