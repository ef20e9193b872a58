// Serial reference paths vs the OpenMP kernels. The census kernel also
// swaps in bitset BFS, so its ratio is not a pure thread speedup.
// Usage: bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pww/distance.hpp"
#include "pww/enumerate.hpp"
#include "pww/generators.hpp"

using namespace pww;

namespace {

double best_of(int repeats, const std::function<void()> &f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char *name, double serial, double parallel, bool same) {
  std::printf("%-28s reference %9.4f s  kernel %9.4f s  ratio %6.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif
  int bad = 0;
  for (int n : {500, 1500}) {
    Graph g = random_connected_graph(n, 8.0 / n, 42);
    DistanceMatrix a, b;
    double s = best_of(repeats, [&] { a = distance_matrix_serial(g); });
    double p = best_of(repeats, [&] { b = distance_matrix(g); });
    char name[64];
    std::snprintf(name, sizeof name, "distance matrix n=%d", n);
    row(name, s, p, a == b);
    bad += !(a == b);
  }
  for (int max_n : {6, 7}) {
    ValueCensus a, b;
    double s = best_of(1, [&] { a = enumerate_values_serial(IndexKind::PWW, max_n); });
    double p = best_of(repeats, [&] { b = enumerate_values(IndexKind::PWW, max_n); });
    char name[64];
    std::snprintf(name, sizeof name, "PWW census max_n=%d", max_n);
    row(name, s, p, a == b);
    bad += !(a == b);
  }
  return bad ? 1 : 0;
}
