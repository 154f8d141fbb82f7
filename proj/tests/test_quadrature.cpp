#include <doctest.h>

#include <cmath>
#include <numeric>

#include "nanores/errors.hpp"
#include "nanores/quadrature.hpp"

using namespace nanores;

TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 2n-1 exactly") {
  for (const int n : {1, 2, 5, 16, 64, 96}) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    const int degree = 2 * n - 1;
    const double exact = (degree % 2 == 1) ? 0.0 : 2.0 / (degree + 1);
    const double approx = rule.integrate([degree](double x) { return std::pow(x, degree); }, -1.0, 1.0);
    CHECK(std::abs(approx - exact) < 1e-13);
    // Even degree 2n-2 on [0, 1]: 1 / (2n - 1).
    const double even = rule.integrate([n](double x) { return std::pow(x, 2 * n - 2); }, 0.0, 1.0);
    CHECK(even == doctest::Approx(1.0 / (2 * n - 1)).epsilon(1e-13));
  }
}

TEST_CASE("nodes are sorted and symmetric") {
  const GaussLegendreRule rule(33);
  for (int i = 1; i < rule.order(); ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  for (int i = 0; i < rule.order(); ++i) CHECK(rule.nodes[i] == -rule.nodes[rule.order() - 1 - i]);
  CHECK(rule.nodes[16] == 0.0);
  CHECK_THROWS_AS(GaussLegendreRule(0), DomainError);
}

TEST_CASE("adaptive integration of smooth and kinked integrands") {
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI) == doctest::Approx(2.0).epsilon(1e-15));
  // |x - 1/3|^3 has a kink in its third derivative; bisection localizes it.
  const double exact = (std::pow(1.0 / 3.0, 4) + std::pow(2.0 / 3.0, 4)) / 4.0;
  CHECK(std::abs(integrate_adaptive([](double x) { return std::pow(std::abs(x - 1.0 / 3.0), 3); }, 0.0, 1.0, 1e-15) -
                 exact) < 1e-14);
  CHECK(integrate_adaptive([](double) { return 1.0; }, 0.5, 0.5) == 0.0);
}
