#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pww/graph.hpp"

namespace pww {

// All-pairs hop distances of a connected graph plus its metric profile.
class DistanceMatrix {
public:
  int n() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

  int ecc(Vertex v) const { return ecc_[v]; }
  int radius() const noexcept { return radius_; }
  int diameter() const noexcept { return diameter_; }
  const std::vector<Vertex> &center() const noexcept { return center_; }
  const std::vector<Vertex> &periphery() const noexcept { return periphery_; }
  bool is_peripheral(Vertex v) const { return ecc_[v] == diameter_; }

  friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
  friend DistanceMatrix make_distance_matrix(int n, std::vector<int> dist);

  int n_ = 0;
  std::vector<int> dist_;
  std::vector<int> ecc_;
  int radius_ = 0;
  int diameter_ = 0;
  std::vector<Vertex> center_;
  std::vector<Vertex> periphery_;
};

// Builds the profile (ecc, radius, ...) from a finished row-major matrix.
DistanceMatrix make_distance_matrix(int n, std::vector<int> dist);

// Per-source BFS, sources distributed over OpenMP threads once the graph
// is large enough. Bit-identical to distance_matrix_serial.
// Throws NotConnected.
DistanceMatrix distance_matrix(const Graph &g);

// Single-threaded reference.
DistanceMatrix distance_matrix_serial(const Graph &g);

// BFS distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph &g, Vertex source);

} // namespace pww
