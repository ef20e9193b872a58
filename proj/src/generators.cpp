#include "pww/generators.hpp"

#include <numeric>
#include <queue>
#include <string>

#include "pww/error.hpp"
#include "pww/rng.hpp"

namespace pww {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorCode::InvalidParameter, what); }

} // namespace

CaterpillarCode::CaterpillarCode(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty())
    throw Error(ErrorCode::InvalidCode, "caterpillar code needs a spine of length >= 1");
  for (int c : counts_)
    if (c < 0)
      throw Error(ErrorCode::InvalidCode, "caterpillar leaf counts must be non-negative");
  if (counts_.size() >= 2 && (counts_.front() == 0 || counts_.back() == 0))
    throw Error(ErrorCode::InvalidCode, "end spine vertices of a caterpillar need at least one leaf");
  if (order() < 2)
    throw Error(ErrorCode::InvalidCode, "caterpillar needs at least two vertices");
}

int CaterpillarCode::order() const noexcept {
  return spine_length() + std::accumulate(counts_.begin(), counts_.end(), 0);
}

Graph complete(int n) {
  if (n < 1)
    bad("complete: n >= 1 required");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph path(int n) {
  if (n < 1)
    bad("path: n >= 1 required");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v)
    edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3)
    bad("cycle: n >= 3 required");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    bad("complete_bipartite: both sides need >= 1 vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      edges.emplace_back(u, a + v);
  return build_graph(a + b, edges);
}

Graph star(int n) {
  if (n < 1)
    bad("star: n >= 1 leaves required");
  return complete_bipartite(1, n);
}

Graph double_star(int a, int b) {
  if (a < 1 || b < 1)
    bad("double_star: both centres need >= 1 leaf");
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < a; ++i)
    edges.emplace_back(0, 2 + i);
  for (int i = 0; i < b; ++i)
    edges.emplace_back(1, 2 + a + i);
  return build_graph(2 + a + b, edges);
}

Graph hypercube(int d) {
  if (d < 1)
    bad("hypercube: dimension >= 1 required");
  if (d > 16)
    throw Error(ErrorCode::TooLarge, "hypercube: dimension > 16");
  const Graph k2 = complete(2);
  Graph q = k2;
  for (int i = 1; i < d; ++i)
    q = cartesian_product(q, k2);
  return q;
}

Graph caterpillar(const CaterpillarCode &code) {
  const int s = code.spine_length();
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < s; ++i)
    edges.emplace_back(i, i + 1);
  int next = s;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < code.count(i); ++j)
      edges.emplace_back(i, next++);
  return build_graph(next, edges);
}

Graph lobster(const CaterpillarCode &code, int c) {
  if (code.spine_length() < 3)
    throw Error(ErrorCode::InvalidCode, "lobster: spine length >= 3 required");
  if (code.count(1) != 0)
    throw Error(ErrorCode::InvalidCode, "lobster: c_2 must be 0");
  if (c < 1)
    throw Error(ErrorCode::InvalidCode, "lobster: star needs >= 1 leaf");
  auto edges = caterpillar(code).edges();
  const int centre = code.order();
  edges.emplace_back(1, centre);
  for (int j = 0; j < c; ++j)
    edges.emplace_back(centre, centre + 1 + j);
  return build_graph(centre + 1 + c, edges);
}

Graph spider_depth2(std::span<const int> grandchildren) {
  if (grandchildren.empty())
    bad("spider_depth2: at least one child required");
  const int s = static_cast<int>(grandchildren.size());
  std::vector<Edge> edges;
  int next = s + 1;
  for (int i = 0; i < s; ++i) {
    if (grandchildren[i] < 0)
      bad("spider_depth2: negative grandchild count");
    edges.emplace_back(0, i + 1);
    for (int j = 0; j < grandchildren[i]; ++j)
      edges.emplace_back(i + 1, next++);
  }
  return build_graph(next, edges);
}

Graph prufer_decode(int n, std::span<const int> sequence) {
  if (n < 2)
    bad("prufer_decode: n >= 2 required");
  if (static_cast<int>(sequence.size()) != n - 2)
    bad("prufer_decode: sequence length must be n - 2");
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n)
      bad("prufer_decode: label out of range");
    ++degree[x];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1)
      leaves.push(v);
  std::vector<Edge> edges;
  for (int x : sequence) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1)
      leaves.push(x);
  }
  int u = leaves.top();
  leaves.pop();
  int v = leaves.top();
  edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2)
    bad("random_tree: n >= 2 required");
  Rng rng(seed);
  std::vector<int> seq(n - 2);
  for (auto &x : seq)
    x = static_cast<int>(rng.below(n));
  return prufer_decode(n, seq);
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 2)
    bad("random_connected_graph: n >= 2 required");
  if (!(p > 0.0 && p <= 1.0))
    bad("random_connected_graph: p must lie in (0, 1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.unit() < p)
          edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    if (is_connected(g))
      return g;
  }
  bad("random_connected_graph: no connected sample in 1000 attempts");
}

} // namespace pww
