#include "nanores/dispersion_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nanores/errors.hpp"

namespace nanores {

namespace {

constexpr double kMinDerivative = 1e-300;
constexpr double kDedupRadius = 1e-8;
// Iterates further than this many branch spacings from the seed have left the
// seed's basin; G decays like e^{Im(krs)} toward Im k -> -inf without a root.
constexpr double kMaxExcursionSpacings = 8.0;

// Closed-form family when it exists; otherwise the undamped positions
// (pi/2 + m pi)/(r s), so that rootless configurations still get a fair try.
Complex branch_seed(const SphereSpec& spec, int m) {
  try {
    return wave_number_exact(spec, m);
  } catch (const DomainError&) {
    return (kPi / 2.0 + m * kPi) / (spec.radius * spec.index());
  }
}

} // namespace

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw DomainError("solver tolerance must be positive");
  if (max_iter < 1) throw DomainError("solver needs at least one iteration");
}

int branch_index(Complex k, const SphereSpec& spec) {
  const Complex w = k * spec.radius * spec.index();
  return static_cast<int>(std::lround((w.real() - kPi / 2.0) / kPi));
}

ResonanceMode newton_solve(Complex seed, const SphereSpec& spec, const SolverConfig& cfg) {
  cfg.validate();
  if (!(spec.radius > 0.0)) throw DomainError("sphere radius must be positive");
  if (seed == Complex{}) throw DomainError("Newton seed must be non-zero");

  const double spacing = kPi / std::abs(spec.radius * spec.index());
  const double max_excursion = kMaxExcursionSpacings * spacing;

  Complex k = seed;
  for (int iter = 0; iter <= cfg.max_iter; ++iter) {
    const Complex g = dispersion_residual(k, spec);
    if (std::abs(g) < cfg.tol) {
      ResonanceMode mode;
      mode.k = k;
      mode.lambda = k * k;
      mode.branch_m = std::max(0, branch_index(k, spec));
      mode.source = ModeSource::newton;
      mode.iterations = iter;
      certify(mode, spec);
      if (!(mode.interface_residual < 100.0 * cfg.tol))
        throw SolverError("Newton iterate zeroes G but fails interface certification (|F| = " +
                          std::to_string(mode.interface_residual) + ")");
      return mode;
    }
    if (iter == cfg.max_iter) break;
    const Complex dg = dispersion_derivative(k, spec);
    if (!(std::abs(dg) > kMinDerivative)) throw SolverError("degenerate Newton step: |G'(k)| vanished");
    k -= g / dg;
    if (!is_finite(k) || std::abs(k - seed) > max_excursion)
      throw SolverError("Newton iterate left the seed's basin; no resonance near the seed");
  }
  throw SolverError("Newton did not converge in " + std::to_string(cfg.max_iter) + " iterations");
}

std::vector<ResonanceMode> scan_branches(const SphereSpec& spec, int m_max, const SolverConfig& cfg) {
  if (m_max < 0) throw DomainError("m_max must be non-negative");
  cfg.validate();
  if (!(spec.radius > 0.0)) throw DomainError("sphere radius must be positive");

  std::vector<ResonanceMode> modes;
  modes.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    const Complex seed = branch_seed(spec, m) + cfg.seed_offset;
    ResonanceMode mode = newton_solve(seed, spec, cfg);
    mode.branch_m = branch_index(mode.k, spec);
    modes.push_back(mode);
  }
  std::sort(modes.begin(), modes.end(),
            [](const ResonanceMode& a, const ResonanceMode& b) { return a.k.real() < b.k.real(); });
  const auto last = std::unique(modes.begin(), modes.end(), [](const ResonanceMode& a, const ResonanceMode& b) {
    return std::abs(a.k - b.k) < kDedupRadius;
  });
  if (last != modes.end())
    throw SolverError("branch scan found " + std::to_string(last - modes.begin()) + " distinct roots for " +
                      std::to_string(m_max + 1) + " branches");
  return modes;
}

} // namespace nanores
