#include "nanores/ball_moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "nanores/errors.hpp"
#include "nanores/quadrature.hpp"

namespace nanores {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kBlock = 2048;

struct RadialNodes {
  std::vector<double> a, b, w;

  void push(double ai, double bi, double wi) {
    a.push_back(ai);
    b.push_back(bi);
    w.push_back(wi);
  }
};

// Nodes of the triangle {inner <= outer} in (outer, inner) order.
RadialNodes triangle_nodes(const GaussLegendreRule& rule) {
  RadialNodes nodes;
  const int m = rule.order();
  for (int i = 0; i < m; ++i) {
    const double outer = 0.5 * (1.0 + rule.nodes[static_cast<std::size_t>(i)]);
    const double w_outer = 0.5 * rule.weights[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const double inner = 0.5 * outer * (1.0 + rule.nodes[static_cast<std::size_t>(j)]);
      nodes.push(outer, inner, w_outer * 0.5 * outer * rule.weights[static_cast<std::size_t>(j)]);
    }
  }
  return nodes;
}

RadialNodes square_nodes(const GaussLegendreRule& rule) {
  RadialNodes nodes;
  const int m = rule.order();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      nodes.push(0.5 * (1.0 + rule.nodes[static_cast<std::size_t>(i)]),
                 0.5 * (1.0 + rule.nodes[static_cast<std::size_t>(j)]),
                 0.25 * rule.weights[static_cast<std::size_t>(i)] * rule.weights[static_cast<std::size_t>(j)]);
    }
  }
  return nodes;
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

struct BallSampleBlock {
  std::vector<double> x0, x1, x2, y0, y1, y2;

  explicit BallSampleBlock(std::size_t capacity) {
    for (auto* v : {&x0, &x1, &x2, &y0, &y1, &y2}) v->resize(capacity);
  }
};

// Uniform point in the unit ball by inverse-CDF radius and a uniform direction.
void sample_ball(std::mt19937_64& gen, double& c0, double& c1, double& c2) {
  const double radius = std::cbrt(uniform01(gen));
  const double cos_theta = 2.0 * uniform01(gen) - 1.0;
  const double phi = 2.0 * kPi * uniform01(gen);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  c0 = radius * sin_theta * std::cos(phi);
  c1 = radius * sin_theta * std::sin(phi);
  c2 = radius * cos_theta;
}

kernels::Sums run_shard(int n, std::int64_t count, std::uint64_t seed, int shard, const kernels::KernelTable& table,
                        double scale) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  std::mt19937_64 gen(seq);
  BallSampleBlock block(kBlock);
  kernels::Sums sums;
  std::int64_t remaining = count;
  while (remaining > 0) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::int64_t>(remaining, kBlock));
    for (std::size_t i = 0; i < len; ++i) {
      sample_ball(gen, block.x0[i], block.x1[i], block.x2[i]);
      sample_ball(gen, block.y0[i], block.y1[i], block.y2[i]);
    }
    const kernels::PairBatch batch{
        {block.x0.data(), len}, {block.x1.data(), len}, {block.x2.data(), len},
        {block.y0.data(), len}, {block.y1.data(), len}, {block.y2.data(), len},
    };
    sums += table.ball_pair(batch, n, scale);
    remaining -= static_cast<std::int64_t>(len);
  }
  return sums;
}

} // namespace

const char* to_string(MomentMethod method) {
  switch (method) {
  case MomentMethod::closed_form: return "closed_form";
  case MomentMethod::quadrature: return "quadrature";
  case MomentMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

MomentEstimate moment_closed_form(int n) {
  MomentEstimate est;
  est.n = n;
  est.method = MomentMethod::closed_form;
  switch (n) {
  case 1: est.value = 128.0 / std::pow(kPi, 3); break;
  case 2: est.value = 768.0 / std::pow(kPi, 5) * (kPi * kPi - 8.0); break;
  default: throw UnsupportedError("closed form known for n = 1, 2 only (got n = " + std::to_string(n) + ")");
  }
  return est;
}

MomentEstimate moment_quadrature(int n, int order, DiagonalSplit layout, kernels::KernelChoice kernel) {
  if (n < 1) throw UnsupportedError("moment order n must be >= 1");
  if (order < 8) throw UnsupportedError("quadrature order must be >= 8");
  const kernels::KernelTable& table = kernels::select(kernel);
  const GaussLegendreRule& rule = gauss_legendre(order);
  const int power = n + 2;

  double integral = 0.0;
  if (layout == DiagonalSplit::split) {
    const RadialNodes tri = triangle_nodes(rule);
    // {a > b} then {a <= b}; the integrand is symmetric so the two are the
    // same nodes with the roles of a and b exchanged.
    integral = table.radial_pair(tri.a, tri.b, tri.w, power) + table.radial_pair(tri.b, tri.a, tri.w, power);
  } else {
    const RadialNodes sq = square_nodes(rule);
    integral = table.radial_pair(sq.a, sq.b, sq.w, power);
  }

  MomentEstimate est;
  est.n = n;
  est.method = MomentMethod::quadrature;
  est.value = 4.0 * kPi / power * integral;
  est.order = order;
  est.kernel = std::string(table.name);
  return est;
}

MomentEstimate moment_monte_carlo(int n, std::int64_t samples, std::uint64_t seed, int shards,
                                  kernels::KernelChoice kernel) {
  if (n < 1) throw UnsupportedError("moment order n must be >= 1");
  if (samples < 1000) throw UnsupportedError("Monte Carlo needs at least 1000 samples");
  if (shards < 1 || shards > 256) throw UnsupportedError("shard count must lie in [1, 256]");
  const kernels::KernelTable& table = kernels::select(kernel);

  const double volume = 4.0 * kPi / 3.0;
  const double scale = volume * volume;
  std::vector<kernels::Sums> partial(static_cast<std::size_t>(shards));
  const auto count_for = [&](int shard) {
    return samples / shards + (shard < samples % shards ? 1 : 0);
  };

  if (shards == 1) {
    partial[0] = run_shard(n, samples, seed, 0, table, scale);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        partial[static_cast<std::size_t>(s)] = run_shard(n, count_for(s), seed, s, table, scale);
      });
    }
  }

  kernels::Sums total;
  for (const auto& p : partial) total += p;
  const double count = static_cast<double>(samples);
  const double mean = total.sum / count;
  const double variance = std::max(0.0, (total.sum_sq - count * mean * mean) / (count - 1.0));

  MomentEstimate est;
  est.n = n;
  est.method = MomentMethod::monte_carlo;
  est.value = mean;
  est.std_error = std::sqrt(variance / count);
  est.samples = samples;
  est.seed = seed;
  est.shards = shards;
  est.kernel = std::string(table.name);
  return est;
}

} // namespace nanores
