#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signless/invariants.hpp"
#include "signless/spectra.hpp"

namespace signless {

/// Catalogue identifiers. EQ2 is the degree-square bound; the rest are the
/// M_k and s_alpha bounds plus their proof-step variants.
enum class BoundId {
  EQ2, EQ4, EQ5, EQ6, EQ7, EQ8, EQ9, EQ10, EQ11, EQ12,
  EQ16, EQ17, EQ18, EQ19, EQ20, EQ21, EQ22, EQ23, EQ24, EQ26, EQ27, EQ28,
};

enum class Direction { Upper, Lower };

struct BoundInfo {
  BoundId id;
  std::string_view name;
  Direction direction;
  /// Expected to hold with slack > 0 on every admissible graph.
  bool strict;
  /// Intermediate quantity from a proof, reported alongside a primary bound.
  bool diagnostic;
  std::string_view applicability;
};

std::span<const BoundInfo> bound_catalog();
const BoundInfo& bound_info(BoundId id);
inline std::string_view bound_name(BoundId id) { return bound_info(id).name; }
std::optional<BoundId> parse_bound_id(std::string_view name);

/// Thrown when a graph falls outside the stated hypotheses of a bound
/// (disconnected, too small, zero spanning-tree count, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Relative tolerance; the absolute tolerance for a report is
/// relative * max(1, |lhs|).
struct Tolerance {
  double relative = 1e-9;
  double scaled(double lhs) const;
};

struct BoundReport {
  BoundId bound = BoundId::EQ2;
  std::optional<double> alpha;
  std::optional<double> k;
  double lhs = 0;
  double rhs = 0;
  /// Oriented so that slack >= 0 means the inequality holds.
  double slack = 0;
  bool holds = false;
  bool equality = false;
  std::optional<std::string> not_applicable_reason;
  /// Free-form annotation, e.g. the zero-exclusion convention for s_alpha.
  std::optional<std::string> note;

  bool applicable() const { return !not_applicable_reason.has_value(); }

  static BoundReport evaluate(BoundId id, std::optional<double> alpha, std::optional<double> k, double lhs,
                              double rhs, Tolerance tol);
  static BoundReport not_applicable(BoundId id, std::optional<double> alpha, std::optional<double> k,
                                    std::string reason);
};

/// A primary bound plus, where one exists, its proof-step diagnostic variant
/// (EQ6 for EQ5, EQ18 for EQ17, EQ26 for EQ24).
struct BoundEvaluation {
  BoundReport primary;
  std::optional<BoundReport> diagnostic;
};

/// Sum of squared degrees against m (2m/(n-1) + n - 2). Needs n >= 2.
BoundReport degree_square_bound(const SpectralSummary& s, Tolerance tol = {});

/// Upper bound on M_k: EQ4 for bipartite graphs (1 <= k <= n-2), EQ5 otherwise
/// (1 <= k <= n-1). Non-bipartite graphs also get the EQ6 diagnostic, which
/// uses the exact degree-square sum.
BoundEvaluation mk_upper_bound(const SpectralSummary& s, int k, Tolerance tol = {});

/// Power-mean bounds on s_alpha (EQ7-EQ12).
///
///   0 < alpha < 1 : upper bound at the given k (EQ7 / EQ10)
///   alpha > 1     : lower bound at the given k (EQ8 / EQ11)
///   alpha < 0     : upper bound minimised over every admissible k; the
///                   argument k is ignored and the report carries the minimiser
///                   (EQ9 / EQ12). Requires a connected graph.
BoundReport power_sum_bound(const SpectralSummary& s, Alpha a, int k, Tolerance tol = {});

/// Weighted AM-GM lower bound on s_alpha for real k >= 0 (EQ16 bipartite,
/// EQ17 non-bipartite, with the EQ18 diagnostic on the latter).
BoundEvaluation amgm_bound(const SpectralSummary& s, Alpha a, double k, Tolerance tol = {});

/// amgm_bound at k = 1, reported as EQ19 / EQ20.
BoundReport amgm_corollary_bound(const SpectralSummary& s, Alpha a, Tolerance tol = {});

/// amgm_bound at alpha = 1/2, k = 1: the incidence-energy form EQ21 / EQ22.
BoundReport ie_amgm_bound(const SpectralSummary& s, Tolerance tol = {});

/// Kober-type lower bound on s_alpha (EQ23 bipartite, EQ24 non-bipartite with
/// the EQ26 diagnostic).
BoundEvaluation kober_bound(const SpectralSummary& s, Alpha a, Tolerance tol = {});

/// kober_bound at alpha = 1/2, reported as EQ27 / EQ28.
BoundReport ie_kober_bound(const SpectralSummary& s, Tolerance tol = {});

/// Right-hand sides as functions of the q_1 stand-in `top` (T, q_1 or D1+1).
/// `spanning` is n*t for bipartite graphs and t1 otherwise.
double amgm_rhs(bool bipartite, int n, double spanning, double top, double alpha, double k);
double kober_rhs(bool bipartite, int n, double spanning, double top, double alpha, int second_max_degree,
                 int min_degree);

/// The same bound evaluated with T and with the weaker D1 + 1 in its place.
struct TightnessRecord {
  BoundId bound;
  double alpha;
  std::optional<double> k;
  double with_T;
  double with_degree;
  /// with_T - with_degree; >= 0 when the T-based bound is at least as sharp.
  double margin;
  bool improves;
};

/// AM-GM (EQ16/EQ17) and Kober (EQ23/EQ24) right-hand sides with T against
/// D1 + 1. Same hypotheses as amgm_bound.
std::vector<TightnessRecord> tightness_compare(const SpectralSummary& s, Alpha a, double k, Tolerance tol = {});

namespace proof {

/// Intermediate inequalities of the power-mean argument, for 0 < alpha < 1:
///   head:  sum_{i<=k} q_i^a <= k^{1-a} (M_k)^a
///   tail:  sum_{i>k}  q_i^a <= (n-k)^{1-a} (2m - M_k)^a
///   split: M_k >= 2mk/n
struct PowerMeanSteps {
  double head_lhs, head_rhs;
  double tail_lhs, tail_rhs;
  double split_lhs, split_rhs;
};

PowerMeanSteps power_mean_steps(const SpectralSummary& s, double alpha, int k);

}  // namespace proof

}  // namespace signless
