#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace signless {

using Edge = std::pair<int, int>;

/// Simple undirected graph with a dense adjacency relation.
///
/// Immutable after construction. Degree data and the edge count are computed
/// once, so a Graph can be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) are merged. Throws std::invalid_argument on an
  /// out-of-range endpoint or a self-loop.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Largest, second largest and smallest entries of the degree sequence.
  /// All are 0 on the null graph; second_max_degree is 0 when n < 2.
  int max_degree() const { return max_degree_; }
  int second_max_degree() const { return second_max_degree_; }
  int min_degree() const { return min_degree_; }

  /// Sum of squared degrees.
  long long degree_square_sum() const { return degree_square_sum_; }

  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<std::uint8_t> adjacency);

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<int> degrees_;
  int max_degree_ = 0;
  int second_max_degree_ = 0;
  int min_degree_ = 0;
  long long degree_square_sum_ = 0;

  friend Graph complement(const Graph& g);
  friend Graph double_cover(const Graph& g);
  friend Graph labeled_graph(int n, std::uint64_t mask);
};

inline Graph from_edges(int n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g);

/// Bipartite double cover (tensor product with K2). Vertex v maps to v (side 0)
/// and n + v (side 1); each edge uv becomes (u,0)-(v,1) and (u,1)-(v,0).
Graph double_cover(const Graph& g);

/// A proper 2-colouring when one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_connected(const Graph& g);

/// Longest shortest path; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

bool is_complete(const Graph& g);
bool is_star(const Graph& g);

/// Number of vertex pairs {i < j}, i.e. the bit width of labeled_graph masks.
int pair_count(int n);

/// The labeled graph whose edge set is selected by the bits of `mask`, with
/// pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... assigned to bits 0, 1, 2, ...
Graph labeled_graph(int n, std::uint64_t mask);

// Named families. Each throws std::invalid_argument on bad parameters.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, centre 0
Graph complete_bipartite_graph(int p, int q);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Tree with degree sequence (n/2, n/2, 1, ..., 1): two adjacent centres each
/// carrying n/2 - 1 leaves. Requires even n >= 4.
Graph double_star_graph(int n);

enum class Family { Complete, Empty, Star, CompleteBipartite, Cycle, Path, DoubleStar };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

/// `q` is only used by CompleteBipartite (as the second part size).
Graph generate(Family family, int n, int q = 0);

}  // namespace signless
