#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pww/graph.hpp"
#include "pww/indices.hpp"

namespace pww {

// Labelled graphs on n <= kMaxMaskOrder vertices as edge bitmasks. Pair p
// in graph6 column order (0,1),(0,2),(1,2),(0,3),... sits at bit
// C(n,2)-1-p, so for a fixed n ascending masks list graphs in ascending
// graph6 order.
constexpr int kMaxMaskOrder = 11;

using EdgeMask = std::uint64_t;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

Graph mask_to_graph(int n, EdgeMask mask);
EdgeMask graph_to_mask(const Graph &g); // InvalidParameter if n too large

// Adjacency rows as vertex bitsets.
struct MaskGraph {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};
};

MaskGraph expand_mask(int n, EdgeMask mask);
bool mask_connected(const MaskGraph &g);

// Same values as index_vector(mask_to_graph(...)) computed with frontier
// bitsets; the graph must be connected with n >= 2.
IndexVector mask_index_vector(const MaskGraph &g);

// Calls f(mask) for every connected labelled graph on n vertices, in
// ascending mask order. Single-threaded.
template <typename F> void for_each_connected_mask(int n, F &&f) {
  const EdgeMask end = EdgeMask{1} << pair_count(n);
  for (EdgeMask mask = 0; mask < end; ++mask)
    if (mask_connected(expand_mask(n, mask)))
      f(mask);
}

// One representative per isomorphism class of trees on n vertices,
// ordered by canonical form. n >= 1.
std::vector<Graph> all_trees(int n);

// Rooted-centre canonical string; equal iff the trees are isomorphic.
std::string tree_canonical_form(const Graph &tree);

} // namespace pww
