#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pww/checked.hpp"
#include "pww/distance.hpp"
#include "pww/generators.hpp"
#include "pww/graph.hpp"

namespace pww {

// A tree rooted at vertex 0 together with its distance matrix.
class TreeView {
public:
  const Graph &graph() const noexcept { return graph_; }
  const DistanceMatrix &distances() const noexcept { return dm_; }
  int n() const noexcept { return graph_.n(); }
  int k() const noexcept { return static_cast<int>(dm_.periphery().size()); }

  Vertex parent(Vertex v) const { return parent_[v]; } // -1 for the root
  // BFS order from the root; parents precede children.
  const std::vector<Vertex> &order() const noexcept { return order_; }
  bool peripheral(Vertex v) const { return peripheral_[v] != 0; }
  bool pendant(Vertex v) const { return pendant_[v] != 0; }

private:
  friend TreeView as_tree(Graph g);
  TreeView(Graph g, DistanceMatrix dm) : graph_(std::move(g)), dm_(std::move(dm)) {}

  Graph graph_;
  DistanceMatrix dm_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
  std::vector<char> peripheral_;
  std::vector<char> pendant_;
};

// Throws NotConnected, NotATree (m != n - 1).
TreeView as_tree(Graph g);

// Side counts of edge (parent(child), child); "first" is the child side.
struct EdgeSides {
  Vertex parent = 0, child = 0;
  Int n1 = 0, n2 = 0; // all vertices
  Int a1 = 0, a2 = 0; // peripheral vertices
};
std::vector<EdgeSides> edge_sides(const TreeView &t);

// x lies on the u-side of the u-v path iff d(x, v) = d(x, u) + d(u, v).
// Interior path vertices are on neither side.
struct PathSides {
  Int n1 = 0, n2 = 0;
  Int a1 = 0, a2 = 0;
};
PathSides path_sides(const TreeView &t, Vertex u, Vertex v);

Int wiener_by_edge_cuts(const TreeView &t);
Int hyper_wiener_by_path_cuts(const TreeView &t);
Int peripheral_wiener_by_edge_cuts(const TreeView &t);
Int peripheral_hyper_wiener_by_path_cuts(const TreeView &t);

// Closed forms evaluated exactly as published. Arguments are validated,
// values are not corrected.
Int closed_form_star(int leaves);                      // 3 C(n,2)
Int closed_form_double_star(int a, int b);             // 6ab + 3a + 3b
Int closed_form_diam4(std::span<const int> children);  // 10 sum|Ci||Cj| + 3 sum C(|Ci|,2)
Int closed_form_caterpillar(const CaterpillarCode &code);
Int closed_form_lobster(const CaterpillarCode &code, int c);
// (k C(d+2k-3, 2), 4 C(d+1, 2) C(k, 2))
std::pair<Int, Int> tree_pww_bounds(int d, int k);

// Variants that follow from the pair-sum definition; these are what the
// brute force reproduces where the published forms disagree.
Int closed_form_double_star_corrected(int a, int b);   // 6ab + 3C(a,2) + 3C(b,2)
Int closed_form_lobster_corrected(const CaterpillarCode &code, int c);
Int tree_pww_upper_bound_pairwise(int d, int k);       // C(d+1,2) C(k,2)

// Leaf counts of the two centres of a diameter-3 tree.
std::pair<int, int> double_star_parameters(const TreeView &t);
// |C_i| for each child c_i of the centre of a diameter-4 tree, in
// increasing vertex order.
std::vector<int> diam4_children_counts(const TreeView &t);

// PWW of the complement, or nullopt when the complement is disconnected.
std::optional<Int> complement_tree_pww(const TreeView &t);

} // namespace pww
