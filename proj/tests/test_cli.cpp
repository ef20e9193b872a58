#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

#include "pww/graph_io.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string &input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = pww::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    out.push_back(l);
  return out;
}

std::vector<std::string> csv_row(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string c; std::getline(in, c, ',');)
    out.push_back(c);
  return out;
}

} // namespace

TEST_CASE("compute on P_3") {
  auto r = run({"compute", "--emit", "csv"}, "3\n0 1\n1 2\n");
  CHECK(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "n,m,diameter,radius,k,pendant_count,W,WW,PW,PWW,TW,TWW");
  CHECK(l[1] == "3,2,2,1,2,2,4,5,2,3,2,3");
}

TEST_CASE("gen star 4 piped into compute") {
  auto g = run({"gen", "star", "4"});
  CHECK(g.code == 0);
  auto r = run({"compute", "--emit", "json"}, g.out);
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["graphs"][0]["W"] == 16);
  CHECK(doc["graphs"][0]["PWW"] == 18);
  auto cuts = run({"compute", "--method", "cuts", "--emit", "csv", "--indices", "w,pww"}, g.out);
  CHECK(cuts.code == 0);
  CHECK(lines(cuts.out)[1] == "5,4,2,1,4,4,16,18");
}

TEST_CASE("compute: graph6 stream, several records") {
  auto r = run({"compute", "--format", "graph6", "--emit", "csv", "--indices", "pww"}, "Bw\nCr\n");
  CHECK(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(csv_row(l[1]).back() == "3");
  CHECK(csv_row(l[2]).back() == "10"); // Cr = C_4
}

TEST_CASE("compute errors") {
  auto disc = run({"compute"}, "3\n0 1\n");
  CHECK(disc.code == 3);
  CHECK(disc.err.find("graph is not connected") != std::string::npos);

  auto single = run({"compute"}, "1\n");
  CHECK(single.code == 3);

  auto bad = run({"compute"}, "3\n0 1\n1 x\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("<stdin>") != std::string::npos);
  CHECK(bad.err.find("line 3") != std::string::npos);

  auto cuts = run({"compute", "--method", "cuts"}, "3\n0 1\n1 2\n2 0\n");
  CHECK(cuts.code == 3);

  CHECK(run({"compute", "--input", "/nonexistent/file"}).code == 2);
  CHECK(run({"compute", "--indices", "zz"}, "2\n0 1\n").code == 2);
  CHECK(run({"compute", "--emit", "xml"}, "2\n0 1\n").code == 2);
}

TEST_CASE("compute from a file names the file on errors") {
  const std::string path = "cli_test_input.txt";
  {
    std::ofstream f(path);
    f << "2\n0 2\n";
  }
  auto r = run({"compute", "--input", path});
  CHECK(r.code == 2);
  CHECK(r.err.find(path + ": line 2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("gen families") {
  auto cube = run({"gen", "hypercube", "3", "--emit", "graph6"});
  CHECK(cube.code == 0);
  auto l = lines(cube.out);
  REQUIRE(l.size() == 1);
  CHECK(pww::parse_graph6(l[0]).n() == 8);

  auto cat = run({"gen", "caterpillar", "2,0,3"});
  CHECK(cat.code == 0);
  auto g = pww::parse_edge_list(cat.out);
  CHECK(g.n() == 8);
  CHECK(g.m() == 7);

  CHECK(run({"gen", "cycle", "2"}).code == 2);
  CHECK(run({"gen", "complete_bipartite", "2", "3"}).code == 0);
  CHECK(run({"gen", "double-star", "2,3"}).code == 0);
  CHECK(run({"gen", "lobster", "1,0,1", "1"}).code == 0);
  CHECK(run({"gen", "spider", "2,1"}).code == 0);
  CHECK(run({"gen", "nope", "3"}).code == 2);
  CHECK(run({"gen", "path", "x"}).code == 2);
  CHECK(run({"gen", "path"}).code == 2);

  auto a = run({"gen", "random-tree", "12", "--seed", "5"});
  auto b = run({"gen", "random-tree", "12", "--seed", "5"});
  auto c = run({"gen", "random-tree", "12", "--seed", "6"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(run({"gen", "random-graph", "9", "0.4"}).code == 0);
}

TEST_CASE("audit subcommand") {
  auto one = run({"audit", "--claims", "T-PWW-PROD", "--max-n", "4"});
  CHECK(one.code == 0);
  CHECK(one.out.find("T-PWW-PROD") != std::string::npos);
  CHECK(one.out.find("Holds") != std::string::npos);

  auto cube = run({"audit", "--claims", "C-HYPERCUBE", "--emit", "json"});
  CHECK(cube.code == 0);
  auto doc = nlohmann::json::parse(cube.out);
  CHECK(doc["claims"][0]["status"] == "Violated");
  CHECK(doc["claims"][0]["witnesses"][0]["graph6"] == pww::write_graph6(pww::parse_graph6("Gr`HOk")));

  CHECK(run({"audit", "--claims", "NOPE"}).code == 2);
  CHECK(run({"audit", "--max-n", "1"}).code == 2);
  CHECK(run({"audit", "--bogus"}).code == 2);
}

TEST_CASE("enumerate-values") {
  auto r = run({"enumerate-values", "--index", "pw", "--max-n", "5"});
  CHECK(r.code == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() > 4);
  CHECK(l[1] == "value,smallest_n,witness_graph6");
  CHECK(csv_row(l[2])[0] == "1");
  CHECK(csv_row(l[2])[1] == "2");
  CHECK(csv_row(l[3])[0] == "2");
  CHECK(csv_row(l[4])[0] == "3");
  CHECK(run({"enumerate-values", "--max-n", "9"}).code == 2);
  CHECK(run({"enumerate-values", "--index", "foo"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compute") != std::string::npos);
}
