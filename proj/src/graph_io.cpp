#include "pww/graph_io.hpp"

#include <charconv>
#include <cstdint>

#include "pww/error.hpp"

namespace pww {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

// Splits on '\n'; the callback gets (1-based line number, line).
template <typename F> void for_each_line(std::string_view text, F &&f) {
  int line_no = 0;
  while (!text.empty()) {
    auto pos = text.find('\n');
    auto line = text.substr(0, pos);
    f(++line_no, line);
    if (pos == std::string_view::npos)
      break;
    text.remove_prefix(pos + 1);
  }
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i]))
      ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j]))
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long &out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void syntax(int line, const std::string &what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what, line);
}

[[noreturn]] void malformed(const std::string &what) {
  throw Error(ErrorCode::MalformedGraph6, "malformed graph6: " + what);
}

} // namespace

EdgeListDocument parse_edge_list_document(std::string_view text) {
  EdgeListDocument doc;
  bool have_n = false;
  std::vector<int> edge_lines;
  for_each_line(text, [&](int line_no, std::string_view raw) {
    auto line = trim(raw);
    if (line.empty())
      return;
    if (line.front() == '#') {
      doc.comments.emplace_back(line.substr(1));
      return;
    }
    auto tok = tokens(line);
    if (!have_n) {
      long long n;
      if (tok.size() != 1 || !parse_int(tok[0], n))
        syntax(line_no, "expected vertex count");
      if (n < 1 || n > (1 << 24))
        syntax(line_no, "vertex count out of range");
      doc.n = static_cast<int>(n);
      have_n = true;
      return;
    }
    long long u, v;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      syntax(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= doc.n || v >= doc.n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex out of range for n = " + std::to_string(doc.n),
                  line_no);
    if (u == v)
      throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop", line_no);
    doc.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  });
  if (!have_n)
    syntax(1, "missing vertex count");
  return doc;
}

Graph parse_edge_list(std::string_view text) {
  auto doc = parse_edge_list_document(text);
  return build_graph(doc.n, doc.edges);
}

std::string write_edge_list(const Graph &g, const std::vector<std::string> &comments) {
  std::string out;
  for (const auto &c : comments)
    out += "#" + c + "\n";
  out += std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view record) {
  if (record.starts_with(">>graph6<<"))
    record.remove_prefix(10);
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
    record.remove_suffix(1);
  if (record.empty())
    malformed("empty record");
  for (char c : record)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      malformed("byte outside 63..126");

  auto byte = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(record[i]) - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (record[0] != '~') {
    n = byte(0);
    pos = 1;
  } else {
    if (record.size() >= 2 && record[1] == '~')
      malformed("8-byte order form not supported");
    if (record.size() < 4)
      malformed("truncated order");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    if (n < 63)
      malformed("non-canonical order encoding");
    pos = 4;
  }
  if (n == 0)
    malformed("order 0 cannot be represented");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (record.size() - pos != groups)
    malformed("expected " + std::to_string(groups) + " data bytes, found " + std::to_string(record.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int v = 1; v < static_cast<int>(n); ++v)
    for (int u = 0; u < v; ++u, ++k) {
      std::uint32_t group = byte(pos + k / 6);
      if ((group >> (5 - k % 6)) & 1u)
        edges.emplace_back(u, v);
    }
  if (bits % 6 != 0) {
    std::uint32_t last = byte(record.size() - 1);
    std::uint32_t pad_mask = (1u << (6 - bits % 6)) - 1;
    if (last & pad_mask)
      malformed("nonzero padding bits");
  }
  return build_graph(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  for_each_line(text, [&](int line_no, std::string_view raw) {
    auto line = trim(raw);
    if (line.empty())
      return;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error &e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  });
  return out;
}

std::string write_graph6(const Graph &g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.n());
  if (n > kGraph6MaxOrder)
    throw Error(ErrorCode::TooLarge, "graph6 supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::uint32_t group = 0;
  int filled = 0;
  for (int v = 1; v < g.n(); ++v) {
    auto adj = g.neighbors(v);
    auto it = adj.begin();
    for (int u = 0; u < v; ++u) {
      while (it != adj.end() && *it < u)
        ++it;
      group = (group << 1) | ((it != adj.end() && *it == u) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

GraphFormat detect_format(std::string_view text) {
  GraphFormat result = GraphFormat::Graph6;
  bool decided = false;
  for_each_line(text, [&](int, std::string_view raw) {
    if (decided)
      return;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#')
      return;
    decided = true;
    long long n;
    auto tok = tokens(line);
    if (tok.size() == 1 && parse_int(tok[0], n))
      result = GraphFormat::EdgeList;
  });
  return result;
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList)
    return {parse_edge_list(text)};
  return parse_graph6_stream(text);
}

} // namespace pww
