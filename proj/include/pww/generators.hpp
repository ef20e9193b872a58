#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pww/graph.hpp"

namespace pww {

// Leaf counts (c_1, ..., c_s) along a caterpillar spine u_1 ... u_s.
// For s >= 2 the end counts c_1 and c_s are non-zero.
class CaterpillarCode {
public:
  // Throws InvalidCode.
  explicit CaterpillarCode(std::vector<int> counts);

  int spine_length() const noexcept { return static_cast<int>(counts_.size()); }
  int count(int i) const { return counts_[i]; } // 0-based spine index
  std::span<const int> counts() const noexcept { return counts_; }
  int order() const noexcept;

private:
  std::vector<int> counts_;
};

// Family constructors. Numbering:
//   path(n)       0-1-...-(n-1)
//   cycle(n)      path plus edge (n-1, 0)
//   complete_bipartite(a, b)  sides 0..a-1 and a..a+b-1
//   star(n)       centre 0, leaves 1..n  (= K_{1,n})
//   double_star(a, b)  centres 0 and 1, leaves of 0 are 2..a+1, then b(1)
//   hypercube(d)  x ~ y iff x ^ y is a power of two
//   caterpillar   spine 0..s-1, then the c_1 leaves of u_1, the c_2 of u_2, ...
//   lobster       caterpillar numbering, star centre next, then its c leaves
//   spider_depth2(counts)  root 0, children 1..s, then grandchildren grouped
//                 by child in order
// All throw InvalidParameter / InvalidCode on bad arguments.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);
Graph double_star(int a, int b);
Graph hypercube(int d);              // TooLarge for d > 16
Graph caterpillar(const CaterpillarCode &code);
Graph lobster(const CaterpillarCode &code, int c);
Graph spider_depth2(std::span<const int> grandchildren);

// Uniform labelled tree via Prufer decoding.
Graph random_tree(int n, std::uint64_t seed);

// G(n, p) conditioned on connectivity by rejection (1000 attempts, then
// InvalidParameter).
Graph random_connected_graph(int n, double p, std::uint64_t seed);

// Tree from a Prufer sequence of length n - 2 over 0..n-1.
Graph prufer_decode(int n, std::span<const int> sequence);

} // namespace pww
