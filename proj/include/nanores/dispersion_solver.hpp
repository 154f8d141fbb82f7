#pragma once

// Newton iteration on the entire dispersion function G(k) in the complex
// wave-number plane. Independent of the closed forms except for seeding.

#include <vector>

#include "nanores/exact_resonance.hpp"

namespace nanores {

struct SolverConfig {
  double tol = 1e-13;  // |G| target
  int max_iter = 60;
  Complex seed_offset{0.1, 0.1};

  void validate() const;
};

/// Newton on G from `seed`. Throws SolverError on non-convergence, a
/// degenerate derivative, a runaway iterate, or a root that fails the
/// interface certification |F| < 100 tol.
ResonanceMode newton_solve(Complex seed, const SphereSpec& spec, const SolverConfig& cfg = {});

/// Branches 0..m_max, seeded from the closed-form family plus cfg.seed_offset.
/// Sorted by Re(k); roots closer than 1e-8 are merged, which is reported as
/// a SolverError since every branch must produce a distinct mode.
std::vector<ResonanceMode> scan_branches(const SphereSpec& spec, int m_max, const SolverConfig& cfg = {});

/// Nearest branch index for a root of G.
int branch_index(Complex k, const SphereSpec& spec);

} // namespace nanores
