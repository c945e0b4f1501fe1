#include "signless/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

namespace signless {

Graph::Graph(int n, std::vector<std::uint8_t> adjacency)
    : n_(n), adjacency_(std::move(adjacency)), degrees_(n, 0) {
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) degrees_[u] += adjacency_[static_cast<std::size_t>(u) * n_ + v];
  }
  long long total = 0;
  for (int d : degrees_) {
    total += d;
    degree_square_sum_ += static_cast<long long>(d) * d;
  }
  m_ = static_cast<int>(total / 2);

  std::vector<int> sorted = degrees_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (n_ >= 1) {
    max_degree_ = sorted.front();
    min_degree_ = sorted.back();
  }
  if (n_ >= 2) second_max_degree_ = sorted[1];
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
  }
  return Graph(n, std::move(adj));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) adj[static_cast<std::size_t>(u) * n + v] = 1;
  return Graph(n, std::move(adj));
}

Graph double_cover(const Graph& g) {
  const int n = g.order();
  const int n2 = 2 * n;
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n2) * n2, 0);
  auto set = [&](int a, int b) {
    adj[static_cast<std::size_t>(a) * n2 + b] = 1;
    adj[static_cast<std::size_t>(b) * n2 + a] = 1;
  };
  for (auto [u, v] : g.edges()) {
    set(u, n + v);
    set(n + u, v);
  }
  return Graph(n2, std::move(adj));
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  return n >= 2 && g.size() == n - 1 && g.max_degree() == n - 1;
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph labeled_graph(int n, std::uint64_t mask) {
  if (n < 0 || pair_count(n) > 63) throw std::invalid_argument("labeled_graph: n out of range");
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1u) {
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
      }
    }
  }
  return Graph(n, std::move(adj));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edges(n, e);
}

Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty graph needs n >= 1");
  return from_edges(n, {});
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star K_{1,n-1} needs n >= 2");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return from_edges(n, e);
}

Graph complete_bipartite_graph(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("K_{p,q} needs p, q >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) e.emplace_back(u, p + v);
  return from_edges(p + q, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return from_edges(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edges(n, e);
}

Graph double_star_graph(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("double star needs even n >= 4");
  const int leaves = n / 2 - 1;
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int centre : {0, 1})
    for (int i = 0; i < leaves; ++i) e.emplace_back(centre, next++);
  return from_edges(n, e);
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Complete, "complete"},     {Family::Empty, "empty"},
    {Family::Star, "star"},             {Family::CompleteBipartite, "complete-bipartite"},
    {Family::Cycle, "cycle"},           {Family::Path, "path"},
    {Family::DoubleStar, "double-star"},
};

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& f : kFamilyNames)
    if (f.name == name) return f.family;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& entry : kFamilyNames)
    if (entry.family == f) return entry.name;
  return "unknown";
}

Graph generate(Family family, int n, int q) {
  switch (family) {
    case Family::Complete: return complete_graph(n);
    case Family::Empty: return empty_graph(n);
    case Family::Star: return star_graph(n);
    case Family::CompleteBipartite: return complete_bipartite_graph(n, q);
    case Family::Cycle: return cycle_graph(n);
    case Family::Path: return path_graph(n);
    case Family::DoubleStar: return double_star_graph(n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace signless
