#include "pww/distance.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pww/error.hpp"

namespace pww {

namespace {

// Below this order the thread fork costs more than the BFS work.
constexpr int kParallelThreshold = 128;

void bfs_into(const Graph &g, Vertex source, std::span<int> dist, std::vector<Vertex> &queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
}

void require_connected(const Graph &g) {
  if (!is_connected(g))
    throw Error(ErrorCode::NotConnected, "graph is not connected");
}

} // namespace

std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(g.n());
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  bfs_into(g, source, dist, queue);
  return dist;
}

DistanceMatrix make_distance_matrix(int n, std::vector<int> dist) {
  DistanceMatrix dm;
  dm.n_ = n;
  dm.dist_ = std::move(dist);
  dm.ecc_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto row = dm.row(v);
    dm.ecc_[v] = *std::max_element(row.begin(), row.end());
  }
  dm.radius_ = *std::min_element(dm.ecc_.begin(), dm.ecc_.end());
  dm.diameter_ = *std::max_element(dm.ecc_.begin(), dm.ecc_.end());
  for (Vertex v = 0; v < n; ++v) {
    if (dm.ecc_[v] == dm.radius_)
      dm.center_.push_back(v);
    if (dm.ecc_[v] == dm.diameter_)
      dm.periphery_.push_back(v);
  }
  return dm;
}

DistanceMatrix distance_matrix_serial(const Graph &g) {
  require_connected(g);
  const int n = g.n();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s)
    bfs_into(g, s, std::span<int>(dist.data() + static_cast<std::size_t>(s) * n, n), queue);
  return make_distance_matrix(n, std::move(dist));
}

DistanceMatrix distance_matrix(const Graph &g) {
#ifdef _OPENMP
  if (g.n() < kParallelThreshold || omp_in_parallel())
    return distance_matrix_serial(g);
  require_connected(g);
  const int n = g.n();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(static)
    for (Vertex s = 0; s < n; ++s)
      bfs_into(g, s, std::span<int>(dist.data() + static_cast<std::size_t>(s) * n, n), queue);
  }
  return make_distance_matrix(n, std::move(dist));
#else
  return distance_matrix_serial(g);
#endif
}

} // namespace pww
