#pragma once

#include <span>
#include <vector>

#include "pww/checked.hpp"
#include "pww/distance.hpp"
#include "pww/graph.hpp"

namespace pww {

// The six distance-based indices of one connected graph, exact.
struct IndexVector {
  Int w = 0;   // Wiener
  Int ww = 0;  // hyper-Wiener
  Int pw = 0;  // peripheral Wiener
  Int pww = 0; // peripheral hyper-Wiener
  Int tw = 0;  // terminal Wiener (pendant pairs)
  Int tww = 0; // terminal hyper-Wiener
  int k = 0;             // |Peri(G)|
  int pendant_count = 0; // degree-1 vertices

  friend bool operator==(const IndexVector &, const IndexVector &) = default;
};

struct PairSums {
  Int distance = 0; // sum of d(u, v)
  Int hyper = 0;    // sum of d(u, v) (d(u, v) + 1) / 2
};

// Sums over unordered pairs of distinct vertices drawn from `set`.
PairSums pair_sums(const DistanceMatrix &dm, std::span<const Vertex> set);

// All of the following throw TrivialGraph when n = 1.
Int wiener(const DistanceMatrix &dm);
Int hyper_wiener(const DistanceMatrix &dm);
Int peripheral_distance_number(const DistanceMatrix &dm, Vertex v);
Int peripheral_wiener(const DistanceMatrix &dm);
// Pair-sum definition; the vertex-sum expression over d_P is not used.
Int peripheral_hyper_wiener(const DistanceMatrix &dm);

std::vector<Vertex> pendant_vertices(const Graph &g);
// Empty or singleton pendant sets give 0.
Int terminal_wiener(const DistanceMatrix &dm, const Graph &g);
Int terminal_hyper_wiener(const DistanceMatrix &dm, const Graph &g);

IndexVector index_vector(const Graph &g, const DistanceMatrix &dm);
// Throws NotConnected, TrivialGraph.
IndexVector index_vector(const Graph &g);

} // namespace pww
