#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signless/bounds.hpp"
#include "signless/graph.hpp"
#include "signless/spectra.hpp"

namespace signless {

/// Structural and spectral facts the main bounds rely on.
enum class LemmaId {
  DegreeSquares,       // sum d_i^2 <= m(2m/(n-1) + n - 2)
  BipartiteSpectra,    // L and Q spectra coincide iff bipartite
  TreeProducts,        // prod mu = n t; prod q = t1 (non-bipartite)
  SignlessTop,         // q_1 >= T >= D1 + 1
  SignlessSecond,      // q_2 >= D2 - 1
  SignlessBottom,      // q_n < delta
  DistinctCount,       // diameter + 1 <= #distinct q
  LaplacianSecond,     // mu_2 >= D2
  AlgebraicConnectivity,  // mu_{n-1} <= delta unless complete
  FlatLaplacian,       // mu_1 = ... = mu_{n-1} iff K_n or empty
};

enum class LemmaStatus { Pass, Fail, NotApplicable };

struct LemmaReport {
  LemmaId lemma = LemmaId::DegreeSquares;
  LemmaStatus status = LemmaStatus::NotApplicable;
  /// Witness values of the main comparison (e.g. q_2 against D2 - 1).
  double lhs = 0;
  double rhs = 0;
  bool equality = false;
  std::string detail;
};

std::string_view lemma_name(LemmaId id);  // "L2.1" ... "L2.10"
std::string_view status_name(LemmaStatus s);

/// Every lemma predicate in order, each gated on its own hypotheses.
std::vector<LemmaReport> lemma_suite(const Graph& g, const SpectralSummary& s, Tolerance tol = {});

/// Weighted AM-GM gap: lhs = sum p_i a_i - prod a_i^{p_i},
/// rhs = n * min(p) * (mean(a) - geomean(a)). lhs >= rhs, with equality iff
/// all a_i are equal. Values must be positive and weights non-negative
/// summing to 1 (within 1e-12).
struct AmgmGap {
  double lhs;
  double rhs;
};
AmgmGap weighted_amgm_gap(std::span<const double> values, std::span<const double> weights);

/// p (A_p - G_p) for each prefix length p = 2..len, where A_p and G_p are the
/// arithmetic and geometric means of the first p values.
struct KoberStep {
  int p;
  double gap;     // A_p - G_p
  double scaled;  // p (A_p - G_p)
};

struct KoberChain {
  std::vector<KoberStep> steps;
  /// A_p for the full list, and G_p + (sqrt(a_1) - sqrt(a_2))^2 / p.
  double mean;
  double mean_lower_bound;

  /// Each scaled gap is at least its predecessor (to within `eps`).
  bool monotone(double eps) const;
};
KoberChain kober_chain(std::span<const double> values);

}  // namespace signless
