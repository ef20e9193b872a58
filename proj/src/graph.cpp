#include "pww/graph.hpp"

#include <algorithm>
#include <string>

#include "pww/error.hpp"

namespace pww {

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    return false;
  const auto &adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 1)
    throw Error(ErrorCode::InvalidParameter, "graph needs at least one vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n = " + std::to_string(n));
    if (u == v)
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto &list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  return Graph(std::move(adj), static_cast<int>(degree_sum / 2));
}

bool is_connected(const Graph &g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n();
}

Graph complement(const Graph &g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto adj = g.neighbors(u);
    auto it = adj.begin();
    for (Vertex v = u + 1; v < g.n(); ++v) {
      while (it != adj.end() && *it < v)
        ++it;
      if (it == adj.end() || *it != v)
        edges.emplace_back(u, v);
    }
  }
  return build_graph(g.n(), edges);
}

Graph cartesian_product(const Graph &g, const Graph &h) {
  const long long total = static_cast<long long>(g.n()) * h.n();
  if (total > (1LL << 24))
    throw Error(ErrorCode::TooLarge, "product has too many vertices");
  const int hn = h.n();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.n()) * h.m() + static_cast<std::size_t>(hn) * g.m());
  for (Vertex a = 0; a < g.n(); ++a)
    for (auto [x, y] : h.edges())
      edges.emplace_back(a * hn + x, a * hn + y);
  for (auto [a, b] : g.edges())
    for (Vertex x = 0; x < hn; ++x)
      edges.emplace_back(a * hn + x, b * hn + x);
  return build_graph(static_cast<int>(total), edges);
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
  if (vertices.empty())
    throw Error(ErrorCode::EmptyVertexSet, "induced subgraph of an empty vertex set");
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> label(g.n(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n())
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(sorted[i]) + " out of range");
    label[sorted[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : sorted)
    for (Vertex v : g.neighbors(u))
      if (u < v && label[v] >= 0)
        edges.emplace_back(label[u], label[v]);
  return build_graph(static_cast<int>(sorted.size()), edges);
}

} // namespace pww
