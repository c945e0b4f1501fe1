#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signless/bounds.hpp"
#include "signless/graph.hpp"
#include "signless/io.hpp"
#include "signless/lemmas.hpp"

namespace signless {

/// Which k values the power-mean, M_k and AM-GM bounds are evaluated at.
/// With `all`, integer k runs over the admissible range and the AM-GM bounds
/// use `default_real_ks`; otherwise `values` supplies both (non-integers and
/// out-of-range entries are skipped for the integer bounds).
struct KPolicy {
  bool all = true;
  std::vector<double> values;
};

struct RunConfig {
  std::vector<double> alphas{-1.0, -0.5, 0.5, 1.5, 2.0};
  std::vector<double> default_real_ks{0.0, 0.5, 1.0, 2.0};
  KPolicy k;
  Tolerance tol;
  unsigned jobs = 1;
  int max_order = io::kDefaultGraph6Limit;
  /// Emit the spectral invariants (n, m, t, IE, ...) as records.
  bool include_invariants = true;
};

/// Reads the tolerance override from SIGNLESS_TOL when set and parseable.
std::optional<double> tolerance_from_env();

struct GraphInput {
  std::string locator;
  Graph graph;
};

struct GraphResult {
  std::string locator;
  std::vector<io::Record> records;
};

/// Invariants, lemma suite and every bound on the configured grid for one
/// graph. Bounds whose hypotheses the graph misses become not-applicable
/// records.
GraphResult evaluate_graph(const Graph& g, const std::string& locator, const RunConfig& config);

/// Evaluates `count` inputs on `config.jobs` workers. `make(i)` may return
/// nullopt to skip an index. Results reach `sink` in index order regardless
/// of which worker finished first.
void run_batch(std::size_t count, const std::function<std::optional<GraphInput>(std::size_t)>& make,
               const RunConfig& config, const std::function<void(GraphResult&&)>& sink);

/// All 2^(n(n-1)/2) labeled graphs on n vertices in mask order, optionally
/// restricted to connected ones. Locators look like "n5#37:D?{".
void enumerate_labeled(int n, bool connected_only, const RunConfig& config,
                       const std::function<void(GraphResult&&)>& sink);

/// Aggregate statistics over a stream of results.
class SweepSummary {
 public:
  struct BoundStats {
    long evaluated = 0;
    long failures = 0;
    long equalities = 0;
    long strict_violations = 0;  // equality-band slack on a strict bound
    long not_applicable = 0;
    double min_slack = 0;
    double min_relative_slack = 0;
    std::string min_slack_graph;
    std::vector<std::string> equality_graphs;  // first few
  };
  struct LemmaStats {
    long pass = 0;
    long fail = 0;
    long not_applicable = 0;
    long equalities = 0;
    std::vector<std::string> failed_graphs;  // first few
  };

  explicit SweepSummary(Tolerance tol = {}) : tol_(tol) {}

  void add(const GraphResult& result);

  long graphs() const { return graphs_; }
  /// Failed primary bounds plus failed lemma predicates.
  long failures() const;
  /// Failed diagnostic (proof-step) variants; reported, not counted above.
  long diagnostic_failures() const;

  const std::map<BoundId, BoundStats>& bounds() const { return bounds_; }
  const std::map<LemmaId, LemmaStats>& lemmas() const { return lemmas_; }

  void print(std::ostream& out) const;

 private:
  Tolerance tol_;
  long graphs_ = 0;
  std::map<BoundId, BoundStats> bounds_;
  std::map<LemmaId, LemmaStats> lemmas_;
};

/// Equality flags that a named family must show; returns one message per miss.
std::vector<std::string> family_expectations(Family family, const GraphResult& result);

}  // namespace signless
