#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pww/graph.hpp"

namespace pww {

// Text form: first non-comment line is n, then one "u v" pair per line,
// 0-based. Lines starting with '#' are comments; blank lines are skipped.
struct EdgeListDocument {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> comments; // without the leading '#'
};

// Throws SyntaxError with Error::line() set; range and self-loop
// violations are reported with the offending line as well.
EdgeListDocument parse_edge_list_document(std::string_view text);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph &g, const std::vector<std::string> &comments = {});

// graph6 limits of the 1- and 4-byte order encodings
constexpr int kGraph6MaxOrder = 258047;

// One graph6 record, optionally followed by a newline. An optional
// ">>graph6<<" header is accepted. Throws MalformedGraph6.
Graph parse_graph6(std::string_view record);

// Newline-separated records; blank lines ignored. Error::line() names the
// failing record.
std::vector<Graph> parse_graph6_stream(std::string_view text);

// Without trailing newline. Throws TooLarge above kGraph6MaxOrder.
std::string write_graph6(const Graph &g);

enum class GraphFormat { EdgeList, Graph6 };

// Edge list when the first meaningful line is a lone integer.
GraphFormat detect_format(std::string_view text);

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);

} // namespace pww
