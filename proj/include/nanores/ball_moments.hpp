#pragma once

// Moments M_n = \int_B \int_B |x - y|^n u0(x) u0(y) dx dy on the unit ball.
//
// After both angular integrations,
//   M_n = 4 pi / (n + 2) \int_0^1 \int_0^1 [(a + b)^{n+2} - |a - b|^{n+2}] sin(pi a / 2) sin(pi b / 2) da db,
// which is what moment_quadrature integrates. Monte Carlo samples the full
// six-dimensional integral instead and shares nothing with that reduction.

#include <cstdint>
#include <string>

#include "nanores/kernels/moment_kernels.hpp"

namespace nanores {

enum class MomentMethod { closed_form, quadrature, monte_carlo };

const char* to_string(MomentMethod method);

struct MomentEstimate {
  int n = 1;
  double value = 0.0;
  MomentMethod method = MomentMethod::closed_form;
  double std_error = 0.0;    // sample std / sqrt(samples); Monte Carlo only
  std::int64_t samples = 0;  // Monte Carlo only
  std::uint64_t seed = 0;    // Monte Carlo only
  int shards = 0;            // Monte Carlo only
  int order = 0;             // quadrature only
  std::string kernel;        // SIMD kernel that evaluated the integrand, if any
};

/// 128/pi^3 for n = 1, (768/pi^5)(pi^2 - 8) for n = 2; UnsupportedError otherwise.
MomentEstimate moment_closed_form(int n);

enum class DiagonalSplit { split, unsplit };

/// Tensor Gauss–Legendre of the given order on the triangles {a <= b} and
/// {a > b}. `unsplit` integrates the whole square with one tensor rule and
/// only exists to demonstrate why the split is needed.
MomentEstimate moment_quadrature(int n, int order = 64, DiagonalSplit layout = DiagonalSplit::split,
                                 kernels::KernelChoice kernel = kernels::KernelChoice::automatic);

/// Default number of independent Monte Carlo substreams.
inline constexpr int kDefaultShards = 4;

/// Uniform sampling of B x B: radius U^{1/3}, direction uniform on the sphere.
/// Shard i draws from its own std::mt19937_64 seeded with (seed, i); shards
/// run on separate threads and merge in shard order, so the result is
/// reproducible for fixed (seed, samples, shards, kernel).
MomentEstimate moment_monte_carlo(int n, std::int64_t samples, std::uint64_t seed, int shards = kDefaultShards,
                                  kernels::KernelChoice kernel = kernels::KernelChoice::automatic);

} // namespace nanores
