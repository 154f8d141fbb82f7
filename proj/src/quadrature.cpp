#include "nanores/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "nanores/errors.hpp"

namespace nanores {

namespace {

struct LegendreValue {
  double value;      // P_n(x)
  double derivative; // P_n'(x)
};

LegendreValue legendre(int n, double x) {
  double prev = 1.0, cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return {cur, n * (x * cur - prev) / (x * x - 1.0)};
}

} // namespace

GaussLegendreRule::GaussLegendreRule(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  const int n = order;
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  // Newton on P_n from the Tricomi initial guesses; roots are symmetric.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const LegendreValue p = legendre(n, x);
      const double dx = p.value / p.derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).derivative;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

double GaussLegendreRule::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
  return half * sum;
}

const GaussLegendreRule& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(order);
  return *slot;
}

namespace {

double adaptive_step(const std::function<double(double)>& f, const GaussLegendreRule& rule, double a, double b,
                     double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = rule.integrate(f, a, mid);
  const double right = rule.integrate(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= tol) return left + right;
  return adaptive_step(f, rule, a, mid, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, rule, mid, b, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol, int panel_order,
                          int max_depth) {
  if (a == b) return 0.0;
  const GaussLegendreRule& rule = gauss_legendre(panel_order);
  return adaptive_step(f, rule, a, b, rule.integrate(f, a, b), tol, max_depth);
}

} // namespace nanores
