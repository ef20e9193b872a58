#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pww/checked.hpp"
#include "pww/indices.hpp"

namespace pww {

enum class IndexKind { W, WW, PW, PWW, TW, TWW };

std::optional<IndexKind> parse_index_kind(std::string_view name); // "w", "pww", ...
std::string_view to_string(IndexKind kind);
Int select_index(const IndexVector &iv, IndexKind kind);

struct AttainedValue {
  Int value = 0;
  int smallest_n = 0;
  std::string witness_graph6; // smallest graph6 among witnesses of order smallest_n

  friend bool operator==(const AttainedValue &, const AttainedValue &) = default;
};

struct ValueCensus {
  IndexKind index = IndexKind::PWW;
  int max_n = 0;
  std::vector<AttainedValue> attained; // ascending value
  std::vector<Int> missing;            // 1..max attained - 1 not attained
  std::uint64_t graphs = 0;            // connected labelled graphs visited

  friend bool operator==(const ValueCensus &, const ValueCensus &) = default;
};

constexpr int kMaxEnumerationOrder = 8;

// Every connected labelled graph on 2..max_n vertices. The edge-mask
// space of each order is split across OpenMP threads; threads <= 0 keeps
// the runtime default. Throws InvalidParameter unless 2 <= max_n <= 8.
ValueCensus enumerate_values(IndexKind index, int max_n, int threads = 0);

// Reference path through build_graph / distance_matrix_serial /
// index_vector, single-threaded.
ValueCensus enumerate_values_serial(IndexKind index, int max_n);

std::string census_csv(const ValueCensus &census);

} // namespace pww
