#pragma once

// Data-parallel inner loops of the ball-moment integrals. Each kernel exists
// as a scalar reference (libm sin/sqrt/pow) and, where the build and CPU
// allow, an AVX2+FMA variant. Variants are selected at runtime and are
// equivalence-tested against the reference.

#include <cstddef>
#include <span>
#include <string_view>

namespace nanores::kernels {

/// Point pairs (x, y) in structure-of-arrays layout; all six spans share one length.
struct PairBatch {
  std::span<const double> x0, x1, x2;
  std::span<const double> y0, y1, y2;

  std::size_t size() const { return x0.size(); }
};

/// Running sums of f and f^2 over a batch.
struct Sums {
  double sum = 0.0;
  double sum_sq = 0.0;

  Sums& operator+=(const Sums& other) {
    sum += other.sum;
    sum_sq += other.sum_sq;
    return *this;
  }
};

/// Ball-pair integrand: f = scale |x - y|^power u0(|x|) u0(|y|).
using BallPairFn = Sums (*)(const PairBatch& batch, int power, double scale);

/// Radial tensor integrand:
///   sum_i w_i [(a_i + b_i)^power - |a_i - b_i|^power] sin(pi a_i / 2) sin(pi b_i / 2).
using RadialPairFn = double (*)(std::span<const double> a, std::span<const double> b, std::span<const double> w,
                                int power);

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  BallPairFn ball_pair;
  RadialPairFn radial_pair;
};

enum class KernelChoice { automatic, scalar, avx2 };

/// Scalar reference kernels; always available.
const KernelTable& scalar_table();

/// AVX2 kernels, or nullptr when not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

/// Best available table for `automatic`; throws UnsupportedError when a
/// specific ISA is requested but unavailable.
const KernelTable& select(KernelChoice choice = KernelChoice::automatic);

/// Parses "auto" / "scalar" / "avx2"; throws UnsupportedError otherwise.
KernelChoice parse_choice(std::string_view text);

namespace detail {

Sums ball_pair_scalar(const PairBatch& batch, int power, double scale);
double radial_pair_scalar(std::span<const double> a, std::span<const double> b, std::span<const double> w,
                          int power);

#if defined(NANORES_HAVE_AVX2)
Sums ball_pair_avx2(const PairBatch& batch, int power, double scale);
double radial_pair_avx2(std::span<const double> a, std::span<const double> b, std::span<const double> w,
                        int power);
#endif

} // namespace detail

} // namespace nanores::kernels
