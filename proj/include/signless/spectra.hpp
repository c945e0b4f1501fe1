#pragma once

#include <optional>

#include "signless/graph.hpp"
#include "signless/linalg.hpp"

namespace signless {

using Matrix = linalg::SymMatrix<double>;
using Spectrum = linalg::Spectrum<double>;

/// Laplacian and signless Laplacian eigenvalues with |x| <= this are set to 0.
inline constexpr double kZeroClamp = 1e-8;

struct GraphMatrices {
  Matrix adjacency;
  Matrix laplacian;  // D - A
  Matrix signless;   // D + A
};

GraphMatrices build_matrices(const Graph& g);

/// Spanning-tree count by the Matrix-Tree theorem. `integral` is false when
/// the determinant is not within 1e-6 relative of an integer; `value` is
/// then left unrounded.
struct TreeCount {
  double value = 0;
  bool integral = true;
};

TreeCount spanning_tree_count(const Graph& g);

/// 2 t(G x K2) / t(G), with x the bipartite double cover. Throws
/// std::domain_error unless g is connected and non-bipartite.
double t1(const Graph& g);

/// 0.5 * [D1 + delta + sqrt((D1 - delta)^2 + 4 D1)] from the extreme degrees.
/// Throws std::domain_error on the null graph.
double bigT(const Graph& g);

/// The three spectra of one graph plus the scalar data every bound consumes.
class SpectralSummary {
 public:
  static SpectralSummary of(const Graph& g, const linalg::JacobiOptions& options = {});

  int n() const { return n_; }
  int m() const { return m_; }
  int max_degree() const { return max_degree_; }
  int second_max_degree() const { return second_max_degree_; }
  int min_degree() const { return min_degree_; }
  long long degree_square_sum() const { return degree_square_sum_; }
  bool connected() const { return connected_; }
  bool bipartite() const { return bipartite_; }

  const Spectrum& adjacency_spectrum() const { return adjacency_; }
  const Spectrum& laplacian_spectrum() const { return laplacian_; }
  const Spectrum& signless_spectrum() const { return signless_; }

  /// 1-based accessors matching the usual q_1 >= ... >= q_n convention.
  double q(int i) const { return signless_[i - 1]; }
  double mu(int i) const { return laplacian_[i - 1]; }
  double lambda(int i) const { return adjacency_[i - 1]; }

  const TreeCount& spanning_trees() const { return spanning_trees_; }
  /// Present only for connected non-bipartite graphs.
  std::optional<double> t1() const { return t1_; }
  /// Absent on the null graph.
  std::optional<double> bigT() const { return bigT_; }

  /// Number of distinct signless Laplacian eigenvalues; neighbours closer than
  /// 1e-6 * max(1, q_1) are merged.
  int distinct_signless_count() const;

 private:
  int n_ = 0;
  int m_ = 0;
  int max_degree_ = 0;
  int second_max_degree_ = 0;
  int min_degree_ = 0;
  long long degree_square_sum_ = 0;
  bool connected_ = true;
  bool bipartite_ = true;
  Spectrum adjacency_;
  Spectrum laplacian_;
  Spectrum signless_;
  TreeCount spanning_trees_;
  std::optional<double> t1_;
  std::optional<double> bigT_;
};

inline SpectralSummary summarize(const Graph& g) { return SpectralSummary::of(g); }

/// Sum of the k largest signless Laplacian eigenvalues, 1 <= k <= n-1.
double partial_sum_Mk(const SpectralSummary& s, int k);

}  // namespace signless
