#include "signless/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace signless {

GraphMatrices build_matrices(const Graph& g) {
  const int n = g.order();
  linalg::DenseMatrix<double> a = linalg::DenseMatrix<double>::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) a(u, v) = 1.0;
  linalg::DenseMatrix<double> d = linalg::DenseMatrix<double>::Zero(n, n);
  for (int v = 0; v < n; ++v) d(v, v) = g.degree(v);
  return {Matrix(a), Matrix(d - a), Matrix(d + a)};
}

TreeCount spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {0.0, true};
  if (n == 1) return {1.0, true};
  if (!is_connected(g)) return {0.0, true};
  const double det = linalg::determinant(linalg::principal_minor(build_matrices(g).laplacian, 0));
  const double rounded = std::round(det);
  if (std::abs(det - rounded) <= 1e-6 * std::max(1.0, std::abs(rounded))) return {rounded, true};
  return {det, false};
}

double t1(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("t1 requires a connected graph");
  if (is_bipartite(g)) throw std::domain_error("t1 is only defined here for non-bipartite graphs");
  const double cover = spanning_tree_count(double_cover(g)).value;
  return 2.0 * cover / spanning_tree_count(g).value;
}

double bigT(const Graph& g) {
  if (g.order() < 1) throw std::domain_error("T is undefined on the null graph");
  const double hi = g.max_degree();
  const double lo = g.min_degree();
  return 0.5 * (hi + lo + std::sqrt((hi - lo) * (hi - lo) + 4.0 * hi));
}

SpectralSummary SpectralSummary::of(const Graph& g, const linalg::JacobiOptions& options) {
  SpectralSummary s;
  s.n_ = g.order();
  s.m_ = g.size();
  s.max_degree_ = g.max_degree();
  s.second_max_degree_ = g.second_max_degree();
  s.min_degree_ = g.min_degree();
  s.degree_square_sum_ = g.degree_square_sum();
  s.connected_ = is_connected(g);
  s.bipartite_ = is_bipartite(g);

  const auto mats = build_matrices(g);
  s.adjacency_ = linalg::eigenvalues_sym(mats.adjacency, options);
  s.laplacian_ = linalg::clamp_near_zero(linalg::eigenvalues_sym(mats.laplacian, options), kZeroClamp);
  s.signless_ = linalg::clamp_near_zero(linalg::eigenvalues_sym(mats.signless, options), kZeroClamp);
  for (double x : s.laplacian_)
    if (x < 0) throw std::runtime_error("negative Laplacian eigenvalue " + std::to_string(x));
  for (double x : s.signless_)
    if (x < 0) throw std::runtime_error("negative signless Laplacian eigenvalue " + std::to_string(x));

  s.spanning_trees_ = spanning_tree_count(g);
  if (s.connected_ && !s.bipartite_) s.t1_ = signless::t1(g);
  if (s.n_ >= 1) s.bigT_ = signless::bigT(g);
  return s;
}

int SpectralSummary::distinct_signless_count() const {
  if (signless_.empty()) return 0;
  const double gap = 1e-6 * std::max(1.0, signless_[0]);
  int count = 1;
  for (Eigen::Index i = 1; i < signless_.size(); ++i)
    if (signless_[i - 1] - signless_[i] >= gap) ++count;
  return count;
}

double partial_sum_Mk(const SpectralSummary& s, int k) {
  if (k < 1 || k > s.n() - 1) {
    throw std::out_of_range("M_k needs 1 <= k <= n-1, got k=" + std::to_string(k) + " with n=" +
                            std::to_string(s.n()));
  }
  double total = 0;
  for (int i = 1; i <= k; ++i) total += s.q(i);
  return total;
}

}  // namespace signless
