#include <cmath>
#include <numbers>

#include "nanores/kernels/moment_kernels.hpp"

namespace nanores::kernels::detail {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

double u0_reference(double r) {
  if (r == 0.0) return kHalfPi / std::sqrt(2.0 * std::numbers::pi);
  return std::sin(kHalfPi * r) / (std::sqrt(2.0 * std::numbers::pi) * r);
}

} // namespace

Sums ball_pair_scalar(const PairBatch& batch, int power, double scale) {
  Sums sums;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const double dx = batch.x0[i] - batch.y0[i];
    const double dy = batch.x1[i] - batch.y1[i];
    const double dz = batch.x2[i] - batch.y2[i];
    const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
    const double rx = std::sqrt(batch.x0[i] * batch.x0[i] + batch.x1[i] * batch.x1[i] + batch.x2[i] * batch.x2[i]);
    const double ry = std::sqrt(batch.y0[i] * batch.y0[i] + batch.y1[i] * batch.y1[i] + batch.y2[i] * batch.y2[i]);
    const double f = scale * std::pow(dist, power) * u0_reference(rx) * u0_reference(ry);
    sums.sum += f;
    sums.sum_sq += f * f;
  }
  return sums;
}

double radial_pair_scalar(std::span<const double> a, std::span<const double> b, std::span<const double> w,
                          int power) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double kernel = std::pow(a[i] + b[i], power) - std::pow(std::abs(a[i] - b[i]), power);
    sum += w[i] * kernel * std::sin(kHalfPi * a[i]) * std::sin(kHalfPi * b[i]);
  }
  return sum;
}

} // namespace nanores::kernels::detail
