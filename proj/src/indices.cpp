#include "pww/indices.hpp"

#include <numeric>
#include <stdexcept>

#include "pww/error.hpp"

namespace pww {

namespace {

void require_nontrivial(const DistanceMatrix &dm) {
  if (dm.n() < 2)
    throw Error(ErrorCode::TrivialGraph, "index undefined for the one-vertex graph");
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

} // namespace

PairSums pair_sums(const DistanceMatrix &dm, std::span<const Vertex> set) {
  // Accumulate d and d^2 separately; d + d^2 is even for every pair, so
  // the halving below is exact.
  Int sum_d = 0, sum_sq = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto row = dm.row(set[i]);
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      Int d = row[set[j]];
      sum_d = checked_add(sum_d, d);
      sum_sq = checked_add(sum_sq, checked_mul(d, d));
    }
  }
  Int both = checked_add(sum_d, sum_sq);
  if (both % 2 != 0)
    throw std::logic_error("sum of d + d^2 is odd");
  return {sum_d, both / 2};
}

Int wiener(const DistanceMatrix &dm) {
  require_nontrivial(dm);
  return pair_sums(dm, all_vertices(dm.n())).distance;
}

Int hyper_wiener(const DistanceMatrix &dm) {
  require_nontrivial(dm);
  return pair_sums(dm, all_vertices(dm.n())).hyper;
}

Int peripheral_distance_number(const DistanceMatrix &dm, Vertex v) {
  require_nontrivial(dm);
  Int s = 0;
  for (Vertex p : dm.periphery())
    s = checked_add(s, dm.at(p, v));
  return s;
}

Int peripheral_wiener(const DistanceMatrix &dm) {
  require_nontrivial(dm);
  Int pw = pair_sums(dm, dm.periphery()).distance;
  Int twice = 0;
  for (Vertex v : dm.periphery())
    twice = checked_add(twice, peripheral_distance_number(dm, v));
  if (twice != 2 * pw)
    throw std::logic_error("peripheral Wiener pair sum disagrees with half the d_P sum");
  return pw;
}

Int peripheral_hyper_wiener(const DistanceMatrix &dm) {
  require_nontrivial(dm);
  return pair_sums(dm, dm.periphery()).hyper;
}

std::vector<Vertex> pendant_vertices(const Graph &g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1)
      out.push_back(v);
  return out;
}

Int terminal_wiener(const DistanceMatrix &dm, const Graph &g) {
  require_nontrivial(dm);
  return pair_sums(dm, pendant_vertices(g)).distance;
}

Int terminal_hyper_wiener(const DistanceMatrix &dm, const Graph &g) {
  require_nontrivial(dm);
  return pair_sums(dm, pendant_vertices(g)).hyper;
}

IndexVector index_vector(const Graph &g, const DistanceMatrix &dm) {
  require_nontrivial(dm);
  IndexVector iv;
  auto all = pair_sums(dm, all_vertices(dm.n()));
  auto peri = pair_sums(dm, dm.periphery());
  auto pendants = pendant_vertices(g);
  auto term = pair_sums(dm, pendants);
  iv.w = all.distance;
  iv.ww = all.hyper;
  iv.pw = peri.distance;
  iv.pww = peri.hyper;
  iv.tw = term.distance;
  iv.tww = term.hyper;
  iv.k = static_cast<int>(dm.periphery().size());
  iv.pendant_count = static_cast<int>(pendants.size());
  return iv;
}

IndexVector index_vector(const Graph &g) {
  if (g.n() < 2)
    throw Error(ErrorCode::TrivialGraph, "index undefined for the one-vertex graph");
  return index_vector(g, distance_matrix(g));
}

} // namespace pww
