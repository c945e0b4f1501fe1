#pragma once

#include "signless/spectra.hpp"

namespace signless {

/// Real exponent for the power-sum invariants. 0 and 1 are accepted by the
/// plain evaluators (closed forms n and 2m) but rejected by bound evaluators.
struct Alpha {
  double value = 0.5;

  constexpr explicit Alpha(double v) : value(v) {}
  constexpr bool trivial() const { return value == 0.0 || value == 1.0; }
};

/// Result of a power sum over spectral values.
struct PowerSum {
  double value = 0;
  /// Set when alpha < 0 on a connected bipartite graph and the single zero
  /// signless eigenvalue was left out of the sum.
  bool zero_excluded = false;
};

/// s_alpha = sum_i q_i^alpha. For alpha < 0 a zero eigenvalue is an error
/// (std::domain_error) except on connected bipartite graphs, where q_n = 0 is
/// skipped so that s_alpha agrees with sigma_alpha.
PowerSum s_alpha(const SpectralSummary& s, Alpha a);

/// sigma_alpha = sum_{i<n} mu_i^alpha. Throws std::domain_error for alpha < 0
/// when mu_{n-1} = 0.
double sigma_alpha(const SpectralSummary& s, Alpha a);

double incidence_energy(const SpectralSummary& s);
double lel(const SpectralSummary& s);
double graph_energy(const SpectralSummary& s);

/// n * sigma_{-1}. Throws std::domain_error on disconnected graphs.
double kirchhoff_index(const SpectralSummary& s);

}  // namespace signless
