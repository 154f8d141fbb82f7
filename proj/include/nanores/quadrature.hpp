#pragma once

#include <functional>
#include <vector>

namespace nanores {

/// Gauss–Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int order);
  int order() const { return static_cast<int>(nodes.size()); }

  /// Integral of f over [a, b] with this rule mapped affinely.
  double integrate(const std::function<double(double)>& f, double a, double b) const;
};

/// Cached rule of the given order (thread-safe).
const GaussLegendreRule& gauss_legendre(int order);

/// Adaptive bisection with a fixed Gauss–Legendre panel rule: a panel is
/// accepted when the one-panel and two-half-panel estimates differ by less
/// than tol (absolute).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol = 1e-14,
                          int panel_order = 64, int max_depth = 30);

} // namespace nanores
