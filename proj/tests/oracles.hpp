#pragma once

// Reference computations used only by the tests. Each one takes a route that
// shares no code with the library path it checks.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "signless/graph.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline bool multigraph_connected(int n, const EdgeList& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

/// Spanning trees of a multigraph by deletion-contraction:
/// t(G) = t(G - e) + t(G / e), loops dropped after contraction.
inline long long deletion_contraction(int n, EdgeList edges) {
  if (n <= 1) return 1;
  if (!multigraph_connected(n, edges)) return 0;
  const auto [u, v] = edges.back();
  edges.pop_back();
  const long long without = deletion_contraction(n, edges);
  // Contract v into u, then relabel n-1 -> v so labels stay dense.
  EdgeList merged;
  for (auto [a, b] : edges) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == b) continue;
    if (a == n - 1) a = v;
    if (b == n - 1) b = v;
    merged.emplace_back(a, b);
  }
  return without + deletion_contraction(n - 1, merged);
}

inline long long spanning_trees(const signless::Graph& g) {
  const auto edges = g.edges();
  return deletion_contraction(g.order(), EdgeList(edges.begin(), edges.end()));
}

/// Non-bipartite iff some vertex lies on a closed walk of odd length <= n,
/// read off the diagonal of odd powers of the adjacency matrix.
inline bool has_odd_cycle(const signless::Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  Eigen::MatrixXd power = a;
  for (int len = 1; len <= n; len += 2) {
    if (power.trace() > 0.5) return true;
    power = power * a * a;
  }
  return false;
}

/// Connected labeled graphs on n vertices by inclusion-exclusion on the
/// component containing vertex 0.
inline long long connected_labeled_count(int n) {
  std::vector<long long> c(n + 1, 0);
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto all = [](int k) { return 1LL << (k * (k - 1) / 2); };
  for (int m = 1; m <= n; ++m) {
    c[m] = all(m);
    for (int k = 1; k < m; ++k) c[m] -= binom(m - 1, k - 1) * c[k] * all(m - k);
  }
  return c[n];
}

/// graph6 written straight from the format description: one '0'/'1' string
/// over the upper triangle in column order, padded, cut into sextets.
inline std::string graph6_encode(const signless::Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t i = 0; i < bits.size(); i += 6) out += static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2));
  return out;
}

/// Characteristic polynomial coefficients c_0..c_n of det(xI - A) by the
/// Faddeev-LeVerrier recursion (c_n = 1).
inline std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Eigen::MatrixXd::Identity(n, n);
    c[n - k] = -(a * m).trace() / k;
  }
  return c;
}

/// Real roots of the characteristic polynomial, descending, by sign-change
/// scan over the Gershgorin interval followed by bisection. Returns fewer
/// than n roots if two are closer than the scan step.
inline std::vector<double> eigenvalues_by_bisection(const Eigen::MatrixXd& a, int steps = 200000) {
  const auto c = characteristic_polynomial(a);
  auto p = [&](double x) {
    double v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  double lo = 0, hi = 0;
  for (int i = 0; i < a.rows(); ++i) {
    const double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
    lo = std::min(lo, a(i, i) - r);
    hi = std::max(hi, a(i, i) + r);
  }
  lo -= 1e-3;
  hi += 1e-3;
  std::vector<double> roots;
  const double h = (hi - lo) / steps;
  double x0 = lo, f0 = p(lo);
  for (int s = 1; s <= steps; ++s) {
    const double x1 = lo + s * h;
    const double f1 = p(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if (f0 * f1 < 0) {
      double a0 = x0, b0 = x1, fa = f0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a0 + b0);
        const double fm = p(mid);
        if (fm == 0.0) {
          a0 = b0 = mid;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a0 = mid;
          fa = fm;
        } else {
          b0 = mid;
        }
      }
      roots.push_back(0.5 * (a0 + b0));
    }
    x0 = x1;
    f0 = f1;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

/// Kirchhoff index as the sum of pairwise effective resistances, from the
/// Moore-Penrose pseudoinverse L+ = (L + J/n)^{-1} - J/n.
inline double kirchhoff_by_resistance(const signless::Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    l(u, u) += 1;
    l(v, v) += 1;
    l(u, v) -= 1;
    l(v, u) -= 1;
  }
  const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const Eigen::MatrixXd pinv = (l + j).inverse() - j;
  double total = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) total += pinv(u, u) + pinv(v, v) - 2 * pinv(u, v);
  return total;
}

/// Every labeled graph on n vertices (mask order) that satisfies `keep`.
template <typename Keep>
std::vector<signless::Graph> labeled_graphs(int n, Keep keep) {
  std::vector<signless::Graph> out;
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto g = signless::labeled_graph(n, mask);
    if (keep(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
