#include "pww/corpus.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>

#include "pww/distance.hpp"
#include "pww/error.hpp"

namespace pww {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxMaskOrder)
    throw Error(ErrorCode::InvalidParameter, "mask graphs support 1..11 vertices");
}

} // namespace

Graph mask_to_graph(int n, EdgeMask mask) {
  check_order(n);
  const int bits = pair_count(n);
  std::vector<Edge> edges;
  int p = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++p)
      if ((mask >> (bits - 1 - p)) & 1u)
        edges.emplace_back(u, v);
  return build_graph(n, edges);
}

EdgeMask graph_to_mask(const Graph &g) {
  check_order(g.n());
  const int n = g.n(), bits = pair_count(n);
  EdgeMask mask = 0;
  int p = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++p)
      if (g.has_edge(u, v))
        mask |= EdgeMask{1} << (bits - 1 - p);
  return mask;
}

MaskGraph expand_mask(int n, EdgeMask mask) {
  MaskGraph g;
  g.n = n;
  int bit = pair_count(n) - 1;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, --bit)
      if ((mask >> bit) & 1u) {
        g.adj[u] |= static_cast<std::uint16_t>(1u << v);
        g.adj[v] |= static_cast<std::uint16_t>(1u << u);
      }
  return g;
}

bool mask_connected(const MaskGraph &g) {
  const std::uint32_t all = (1u << g.n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= g.adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == all;
}

IndexVector mask_index_vector(const MaskGraph &g) {
  const int n = g.n;
  // level[s][d] = vertices at distance d from s
  std::array<std::array<std::uint16_t, 16>, 16> level{};
  std::array<int, 16> ecc{};
  for (int s = 0; s < n; ++s) {
    std::uint32_t seen = 1u << s, frontier = seen;
    int d = 0;
    level[s][0] = static_cast<std::uint16_t>(frontier);
    while (true) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1)
        next |= g.adj[std::countr_zero(f)];
      next &= ~seen;
      if (!next)
        break;
      seen |= next;
      frontier = next;
      level[s][++d] = static_cast<std::uint16_t>(next);
    }
    ecc[s] = d;
  }
  const int diameter = *std::max_element(ecc.begin(), ecc.begin() + n);
  std::uint32_t peri = 0, pend = 0;
  for (int v = 0; v < n; ++v) {
    if (ecc[v] == diameter)
      peri |= 1u << v;
    if (std::popcount(static_cast<std::uint32_t>(g.adj[v])) == 1)
      pend |= 1u << v;
  }
  // ordered-pair sums, halved at the end
  Int w = 0, ww = 0, pw = 0, pww = 0, tw = 0, tww = 0;
  for (int s = 0; s < n; ++s) {
    const bool sp = (peri >> s) & 1u, st = (pend >> s) & 1u;
    for (int d = 1; d <= ecc[s]; ++d) {
      const std::uint32_t lv = level[s][d];
      const Int hyper = Int{d} * (d + 1) / 2;
      const int all = std::popcount(lv);
      w += Int{d} * all;
      ww += hyper * all;
      if (sp) {
        const int c = std::popcount(lv & peri);
        pw += Int{d} * c;
        pww += hyper * c;
      }
      if (st) {
        const int c = std::popcount(lv & pend);
        tw += Int{d} * c;
        tww += hyper * c;
      }
    }
  }
  IndexVector iv;
  iv.w = w / 2;
  iv.ww = ww / 2;
  iv.pw = pw / 2;
  iv.pww = pww / 2;
  iv.tw = tw / 2;
  iv.tww = tww / 2;
  iv.k = std::popcount(peri);
  iv.pendant_count = std::popcount(pend);
  return iv;
}

namespace {

std::string rooted_form(const Graph &t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent)
      kids.push_back(rooted_form(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto &k : kids)
    s += k;
  return s + ")";
}

} // namespace

std::string tree_canonical_form(const Graph &tree) {
  if (tree.n() == 1)
    return "()";
  const auto &dm = distance_matrix(tree);
  std::string best;
  for (Vertex c : dm.center()) {
    auto s = rooted_form(tree, c, -1);
    if (best.empty() || s < best)
      best = std::move(s);
  }
  return best;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1)
    throw Error(ErrorCode::InvalidParameter, "all_trees: n >= 1 required");
  std::map<std::string, Graph> level;
  level.emplace("()", build_graph(1, {}));
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto &[key, t] : level)
      for (Vertex v = 0; v < t.n(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, t.n());
        Graph grown = build_graph(order, edges);
        next.emplace(tree_canonical_form(grown), std::move(grown));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto &[key, t] : level)
    out.push_back(std::move(t));
  return out;
}

} // namespace pww
