#include "pww/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pww/corpus.hpp"
#include "pww/distance.hpp"
#include "pww/error.hpp"
#include "pww/graph_io.hpp"

namespace pww {

namespace {

struct Best {
  int n = 0; // 0 = not attained
  EdgeMask mask = 0;

  bool improves(int on, EdgeMask om) const { return n == 0 || std::pair(on, om) < std::pair(n, mask); }
};

void check_range(int max_n) {
  if (max_n < 2 || max_n > kMaxEnumerationOrder)
    throw Error(ErrorCode::InvalidParameter, "enumeration needs 2 <= max_n <= 8");
}

template <typename Table> ValueCensus finish(IndexKind index, int max_n, const Table &best, std::uint64_t graphs) {
  ValueCensus census;
  census.index = index;
  census.max_n = max_n;
  census.graphs = graphs;
  for (const auto &[value, b] : best)
    census.attained.push_back({value, b.n, write_graph6(mask_to_graph(b.n, b.mask))});
  std::sort(census.attained.begin(), census.attained.end(),
            [](const AttainedValue &a, const AttainedValue &b) { return a.value < b.value; });
  if (!census.attained.empty()) {
    std::size_t i = 0;
    for (Int v = 1; v < census.attained.back().value; ++v) {
      while (i < census.attained.size() && census.attained[i].value < v)
        ++i;
      if (census.attained[i].value != v)
        census.missing.push_back(v);
    }
  }
  return census;
}

} // namespace

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "w") return IndexKind::W;
  if (lower == "ww") return IndexKind::WW;
  if (lower == "pw") return IndexKind::PW;
  if (lower == "pww") return IndexKind::PWW;
  if (lower == "tw") return IndexKind::TW;
  if (lower == "tww") return IndexKind::TWW;
  return std::nullopt;
}

std::string_view to_string(IndexKind kind) {
  switch (kind) {
  case IndexKind::W: return "W";
  case IndexKind::WW: return "WW";
  case IndexKind::PW: return "PW";
  case IndexKind::PWW: return "PWW";
  case IndexKind::TW: return "TW";
  case IndexKind::TWW: return "TWW";
  }
  return "?";
}

Int select_index(const IndexVector &iv, IndexKind kind) {
  switch (kind) {
  case IndexKind::W: return iv.w;
  case IndexKind::WW: return iv.ww;
  case IndexKind::PW: return iv.pw;
  case IndexKind::PWW: return iv.pww;
  case IndexKind::TW: return iv.tw;
  case IndexKind::TWW: return iv.tww;
  }
  return 0;
}

ValueCensus enumerate_values(IndexKind index, int max_n, int threads) {
  check_range(max_n);
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  const int team = 1;
#endif
  // Values for n <= 8 are small (WW(P_8) = 210), so a flat table indexed by
  // value beats a map in the inner loop.
  std::vector<std::vector<Best>> local(team);
  std::vector<std::uint64_t> counted(team, 0);
  constexpr std::int64_t kChunk = 1 << 14;

  for (int n = 2; n <= max_n; ++n) {
    const std::int64_t total = std::int64_t{1} << pair_count(n);
    const std::int64_t chunks = (total + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (std::int64_t c = 0; c < chunks; ++c) {
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
#else
      const int tid = 0;
#endif
      auto &table = local[tid];
      const std::int64_t hi = std::min(total, (c + 1) * kChunk);
      for (std::int64_t m = c * kChunk; m < hi; ++m) {
        const auto mask = static_cast<EdgeMask>(m);
        MaskGraph g = expand_mask(n, mask);
        if (!mask_connected(g))
          continue;
        ++counted[tid];
        const Int value = select_index(mask_index_vector(g), index);
        if (static_cast<std::size_t>(value) >= table.size())
          table.resize(static_cast<std::size_t>(value) + 1);
        auto &b = table[value];
        if (b.improves(n, mask))
          b = {n, mask};
      }
    }
  }

  std::map<Int, Best> merged;
  std::uint64_t graphs = 0;
  for (int t = 0; t < team; ++t) {
    graphs += counted[t];
    for (std::size_t v = 0; v < local[t].size(); ++v) {
      const Best &b = local[t][v];
      if (b.n == 0)
        continue;
      auto [it, inserted] = merged.try_emplace(static_cast<Int>(v), b);
      if (!inserted && it->second.improves(b.n, b.mask))
        it->second = b;
    }
  }
  return finish(index, max_n, merged, graphs);
}

ValueCensus enumerate_values_serial(IndexKind index, int max_n) {
  check_range(max_n);
  std::map<Int, Best> best;
  std::uint64_t graphs = 0;
  for (int n = 2; n <= max_n; ++n) {
    const EdgeMask end = EdgeMask{1} << pair_count(n);
    for (EdgeMask mask = 0; mask < end; ++mask) {
      Graph g = mask_to_graph(n, mask);
      if (!is_connected(g))
        continue;
      ++graphs;
      const Int value = select_index(index_vector(g, distance_matrix_serial(g)), index);
      auto [it, inserted] = best.try_emplace(value, Best{n, mask});
      if (!inserted && it->second.improves(n, mask))
        it->second = {n, mask};
    }
  }
  return finish(index, max_n, best, graphs);
}

std::string census_csv(const ValueCensus &census) {
  std::string out = "# index=" + std::string(to_string(census.index)) + " max_n=" + std::to_string(census.max_n) +
                    " connected_labelled_graphs=" + std::to_string(census.graphs) + "\n";
  out += "value,smallest_n,witness_graph6\n";
  for (const auto &a : census.attained)
    out += std::to_string(a.value) + "," + std::to_string(a.smallest_n) + "," + a.witness_graph6 + "\n";
  out += "# not_attained_below_max:";
  for (Int v : census.missing)
    out += " " + std::to_string(v);
  out += "\n";
  return out;
}

} // namespace pww
