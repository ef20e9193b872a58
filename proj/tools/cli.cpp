#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pww/audit.hpp"
#include "pww/enumerate.hpp"
#include "pww/error.hpp"
#include "pww/generators.hpp"
#include "pww/graph_io.hpp"
#include "pww/indices.hpp"
#include "pww/tree_forms.hpp"

namespace pww::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream &in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty())
      out.push_back(cur);
  return out;
}

int to_int(const std::string &s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception &) {
    throw Usage("not an integer: " + s);
  }
  if (used != s.size())
    throw Usage("not an integer: " + s);
  return v;
}

double to_double(const std::string &s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    throw Usage("not a number: " + s);
  }
  if (used != s.size())
    throw Usage("not a number: " + s);
  return v;
}

std::vector<int> int_list(const std::vector<std::string> &params) {
  std::vector<int> out;
  for (const auto &p : params)
    for (const auto &x : split(p, ','))
      out.push_back(to_int(x));
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

// ---- compute

const std::vector<IndexKind> kAllIndices = {IndexKind::W,  IndexKind::WW, IndexKind::PW,
                                            IndexKind::PWW, IndexKind::TW, IndexKind::TWW};

std::string index_label(IndexKind k) {
  std::string s(to_string(k));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

struct ComputeOptions {
  std::string input;
  std::string format = "auto";
  std::string emit = "table";
  std::string indices;
  std::string method = "definition";
  std::string output;
};

void cross_check_cuts(const Graph &g, const IndexVector &iv) {
  TreeView t = as_tree(g);
  const Int w = wiener_by_edge_cuts(t), ww = hyper_wiener_by_path_cuts(t);
  const Int pw = peripheral_wiener_by_edge_cuts(t), pww = peripheral_hyper_wiener_by_path_cuts(t);
  if (w != iv.w || ww != iv.ww || pw != iv.pw || pww != iv.pww)
    throw std::logic_error("cut formulas disagree with the definitions on " + write_graph6(g));
}

int cmd_compute(const ComputeOptions &o, std::istream &in, std::ostream &out, std::ostream &err) {
  std::string text, source = "<stdin>";
  if (o.input.empty() || o.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << o.input << "\n";
      return kUsage;
    }
    text = read_all(f);
    source = o.input;
  }

  std::vector<IndexKind> shown = kAllIndices;
  if (!o.indices.empty()) {
    shown.clear();
    for (const auto &name : split(o.indices, ',')) {
      auto k = parse_index_kind(name);
      if (!k) {
        err << "error: unknown index " << name << "\n";
        return kUsage;
      }
      shown.push_back(*k);
    }
  }

  std::vector<Graph> graphs;
  try {
    GraphFormat fmt = o.format == "auto"       ? detect_format(text)
                      : o.format == "graph6"   ? GraphFormat::Graph6
                                               : GraphFormat::EdgeList;
    graphs = parse_graphs(text, fmt);
  } catch (const Error &e) {
    err << "error: " << source << ": " << e.what() << "\n";
    return kUsage;
  }

  struct Row {
    Graph g;
    DistanceMatrix dm;
    IndexVector iv;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      DistanceMatrix dm = distance_matrix(graphs[i]);
      IndexVector iv = index_vector(graphs[i], dm);
      if (o.method == "cuts")
        cross_check_cuts(graphs[i], iv);
      rows.push_back({std::move(graphs[i]), std::move(dm), iv});
    } catch (const Error &e) {
      err << "error: " << source << ": graph " << i + 1 << ": " << e.what() << "\n";
      return kPrecondition;
    } catch (const std::logic_error &e) {
      err << "error: " << e.what() << "\n";
      return kMismatch;
    }
  }

  std::ostringstream buf;
  const std::vector<std::string> head = {"n", "m", "diameter", "radius", "k", "pendant_count"};
  auto fixed = [](const Row &r) {
    return std::vector<Int>{r.g.n(), r.g.m(), r.dm.diameter(), r.dm.radius(), r.iv.k, r.iv.pendant_count};
  };
  if (o.emit == "json") {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["graphs"] = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
      nlohmann::ordered_json j;
      auto f = fixed(r);
      for (std::size_t c = 0; c < head.size(); ++c)
        j[head[c]] = f[c];
      for (IndexKind k : shown)
        j[index_label(k)] = select_index(r.iv, k);
      doc["graphs"].push_back(j);
    }
    buf << doc.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = head;
    for (IndexKind k : shown)
      header.push_back(index_label(k));
    cells.push_back(header);
    for (const auto &r : rows) {
      std::vector<std::string> line;
      for (Int v : fixed(r))
        line.push_back(std::to_string(v));
      for (IndexKind k : shown)
        line.push_back(std::to_string(select_index(r.iv, k)));
      cells.push_back(line);
    }
    if (o.emit == "csv") {
      for (const auto &line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c)
          buf << (c ? "," : "") << line[c];
        buf << "\n";
      }
    } else {
      std::vector<std::size_t> width(header.size(), 0);
      for (const auto &line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
          width[c] = std::max(width[c], line[c].size());
      for (const auto &line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          if (c)
            buf << "  ";
          buf << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        buf << "\n";
      }
    }
  }

  if (o.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kUsage;
    }
    f << buf.str();
  }
  return kOk;
}

// ---- gen

Graph generate(const std::string &family_name, const std::vector<std::string> &params, std::uint64_t seed) {
  const std::string family = lower(family_name);
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Usage(family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "complete") {
    need(1);
    return complete(to_int(params[0]));
  }
  if (family == "path") {
    need(1);
    return path(to_int(params[0]));
  }
  if (family == "cycle") {
    need(1);
    return cycle(to_int(params[0]));
  }
  if (family == "star") {
    need(1);
    return star(to_int(params[0]));
  }
  if (family == "complete-bipartite") {
    auto v = int_list(params);
    if (v.size() != 2)
      throw Usage("complete-bipartite takes a b");
    return complete_bipartite(v[0], v[1]);
  }
  if (family == "double-star") {
    auto v = int_list(params);
    if (v.size() != 2)
      throw Usage("double-star takes a b");
    return double_star(v[0], v[1]);
  }
  if (family == "hypercube") {
    need(1);
    return hypercube(to_int(params[0]));
  }
  if (family == "caterpillar")
    return caterpillar(CaterpillarCode(int_list(params)));
  if (family == "lobster") {
    need(2);
    return lobster(CaterpillarCode(int_list({params[0]})), to_int(params[1]));
  }
  if (family == "spider") {
    auto v = int_list(params);
    return spider_depth2(v);
  }
  if (family == "random-tree") {
    need(1);
    return random_tree(to_int(params[0]), seed);
  }
  if (family == "random-graph") {
    need(2);
    return random_connected_graph(to_int(params[0]), to_double(params[1]), seed);
  }
  throw Usage("unknown family: " + family_name);
}

// ---- audit

struct AuditOptions {
  std::string claims;
  int max_n = 0;
  int trials = -1;
  std::uint64_t seed = audit::kDefaultSeed;
  int threads = 0;
  std::string output;
  std::string emit = "table";
};

int cmd_audit(const AuditOptions &o, std::ostream &out, std::ostream &err) {
  audit::Budget budget;
  if (o.max_n != 0) {
    if (o.max_n < 2 || o.max_n > kMaxEnumerationOrder) {
      err << "error: --max-n must be in 2.." << kMaxEnumerationOrder << "\n";
      return kUsage;
    }
    budget = audit::Budget::from_max_n(o.max_n);
  }
  if (o.trials >= 0)
    budget.trials = o.trials;
  budget.threads = o.threads;
  const auto ids = split(o.claims, ',');
  audit::Report report;
  try {
    report = audit::run_all(budget, o.seed, ids);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string json = audit::report_json(report);
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kUsage;
    }
    f << json;
  }
  out << (o.emit == "json" ? json : audit::report_table(report));
  return report.ok() ? kOk : kMismatch;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"peripheral hyper-Wiener index toolkit", "pwwtool"};
  app.require_subcommand(1);

  ComputeOptions co;
  auto *compute = app.add_subcommand("compute", "indices of each input graph");
  compute->add_option("--input", co.input, "input file (default: standard input)");
  compute->add_option("--format", co.format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  compute->add_option("--emit", co.emit)->check(CLI::IsMember({"table", "csv", "json"}));
  compute->add_option("--indices", co.indices, "comma-separated subset of w,ww,pw,pww,tw,tww");
  compute->add_option("--method", co.method)->check(CLI::IsMember({"definition", "cuts"}));
  compute->add_option("--output", co.output);

  std::string family;
  std::vector<std::string> params;
  std::string gen_emit = "edgelist";
  std::uint64_t gen_seed = audit::kDefaultSeed;
  std::string gen_output;
  auto *gen = app.add_subcommand("gen", "write a graph from a named family");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("--emit", gen_emit)->check(CLI::IsMember({"edgelist", "graph6"}));
  gen->add_option("--seed", gen_seed);
  gen->add_option("--output", gen_output);

  AuditOptions ao;
  auto *aud = app.add_subcommand("audit", "check every registered statement");
  aud->add_option("--claims", ao.claims, "comma-separated claim ids");
  aud->add_option("--max-n", ao.max_n, "exhaustive order bound");
  aud->add_option("--trials", ao.trials);
  aud->add_option("--seed", ao.seed);
  aud->add_option("--threads", ao.threads);
  aud->add_option("--output", ao.output, "JSON report path");
  aud->add_option("--emit", ao.emit)->check(CLI::IsMember({"table", "json"}));

  std::string index_name = "pww";
  int enum_max_n = 7, enum_threads = 0;
  std::string enum_output;
  auto *en = app.add_subcommand("enumerate-values", "attained index values over all small connected graphs");
  en->add_option("--index", index_name);
  en->add_option("--max-n", enum_max_n);
  en->add_option("--threads", enum_threads);
  en->add_option("--output", enum_output, "CSV path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*compute)
      return cmd_compute(co, in, out, err);
    if (*gen) {
      Graph g = generate(family, params, gen_seed);
      std::string text = gen_emit == "graph6" ? write_graph6(g) + "\n" : write_edge_list(g);
      if (gen_output.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_output, std::ios::binary);
        if (!f) {
          err << "error: cannot write " << gen_output << "\n";
          return kUsage;
        }
        f << text;
      }
      return kOk;
    }
    if (*aud)
      return cmd_audit(ao, out, err);
    if (*en) {
      auto kind = parse_index_kind(index_name);
      if (!kind) {
        err << "error: unknown index " << index_name << "\n";
        return kUsage;
      }
      std::string csv = census_csv(enumerate_values(*kind, enum_max_n, enum_threads));
      if (enum_output.empty()) {
        out << csv;
      } else {
        std::ofstream f(enum_output, std::ios::binary);
        if (!f) {
          err << "error: cannot write " << enum_output << "\n";
          return kUsage;
        }
        f << csv;
      }
      return kOk;
    }
  } catch (const Usage &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace pww::cli
