#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace pww {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 with sorted
// adjacency lists. Construct through build_graph().
class Graph {
public:
  int n() const noexcept { return static_cast<int>(adjacency_.size()); }
  int m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  explicit Graph(std::vector<std::vector<Vertex>> adjacency, int m)
      : adjacency_(std::move(adjacency)), m_(m) {}

  std::vector<std::vector<Vertex>> adjacency_;
  int m_ = 0;
};

// Throws SelfLoop / VertexOutOfRange / InvalidParameter (n < 1).
// Duplicate edges are merged.
Graph build_graph(int n, std::span<const Edge> edges);

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph &g);

Graph complement(const Graph &g);

// Vertex (a, x) of g x h is numbered a * h.n() + x.
Graph cartesian_product(const Graph &g, const Graph &h);

// Vertices are relabelled 0..|S|-1 in increasing original order.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

} // namespace pww
