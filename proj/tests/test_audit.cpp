#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "pww/audit.hpp"
#include "pww/error.hpp"
#include "pww/generators.hpp"
#include "pww/graph_io.hpp"

using namespace pww;
using namespace pww::audit;

namespace {

Budget small_budget() {
  Budget b = Budget::from_max_n(5);
  b.max_factor_n = 4;
  b.trials = 40;
  b.max_random_tree_n = 20;
  b.max_random_graph_n = 9;
  return b;
}

const Claim &find(const std::vector<Claim> &list, const std::string &id) {
  auto it = std::find_if(list.begin(), list.end(), [&](const Claim &c) { return c.id == id; });
  REQUIRE(it != list.end());
  return *it;
}

Claim custom(std::vector<Suite> suites, std::function<Outcome(const Instance &)> check) {
  Claim c;
  c.id = "X";
  c.anchor = "x";
  c.suites = std::move(suites);
  c.check = std::move(check);
  return c;
}

} // namespace

TEST_CASE("registry shape") {
  auto claims = register_claims();
  auto shadow = register_shadow_claims();
  CHECK(claims.size() == 35);
  CHECK(shadow.size() == 4);
  std::set<std::string> ids;
  std::set<std::string> discrepancies;
  for (const auto *list : {&claims, &shadow})
    for (const auto &c : *list) {
      CHECK(ids.insert(c.id).second);
      CHECK_FALSE(c.anchor.empty());
      CHECK_FALSE(c.description.empty());
      CHECK_FALSE(c.suites.empty());
      CHECK(c.check);
      if (c.expected == Expectation::Discrepancy)
        discrepancies.insert(c.id);
    }
  CHECK(discrepancies ==
        std::set<std::string>{"C-HYPERCUBE", "DEF-PWW-ALT", "T-DSTAR", "T-LOBSTER", "T-TREE-BOUNDS-LO"});
}

TEST_CASE("budget from max-n") {
  Budget b = Budget::from_max_n(3);
  CHECK(b.max_n == 3);
  CHECK(b.max_factor_n == 3);
  CHECK(b.max_tree_n == 6);
  CHECK(Budget::from_max_n(7).max_factor_n == 5);
}

TEST_CASE("statements expected to hold") {
  auto claims = register_claims();
  Budget b = Budget::from_max_n(6);
  b.trials = 50;
  for (const char *id : {"T-DIAM2", "P1-4", "T-BOUNDS", "EQ-COMPLETE", "HASSE-3"}) {
    CAPTURE(id);
    auto r = run_claim(find(claims, id), b, kDefaultSeed);
    CHECK(r.status == Status::Holds);
    CHECK(r.violations == 0);
    CHECK(r.instances_tested > 0);
    CHECK(r.matches_registration());
  }
}

TEST_CASE("vertex-sum expression is violated, C_4 among the witnesses") {
  auto r = run_claim(find(register_claims(), "DEF-PWW-ALT"), Budget::from_max_n(6), kDefaultSeed);
  CHECK(r.status == Status::Violated);
  CHECK(r.matches_registration());
  REQUIRE(r.witnesses.size() == kMaxWitnesses);
  CHECK(r.witnesses.front().graph6 == write_graph6(complete(3)));
  CHECK(r.witnesses.front().observed == "3");
  CHECK(r.witnesses.front().expected == "9/2");
  bool saw_c4 = false;
  for (const auto &w : r.witnesses) {
    Graph g = parse_graph6(w.graph6);
    const bool c4 = g.n() == 4 && g.m() == 4 && g.degree(0) == 2 && g.degree(1) == 2 && g.degree(2) == 2;
    if (c4) {
      saw_c4 = true;
      CHECK(w.observed == "10");
      CHECK(w.expected == "20");
    }
  }
  CHECK(saw_c4);
}

TEST_CASE("pre-registered discrepancies") {
  Budget b = small_budget();
  auto claims = register_claims();
  for (const char *id : {"C-HYPERCUBE", "T-DSTAR", "T-LOBSTER", "T-TREE-BOUNDS-LO"}) {
    CAPTURE(id);
    auto r = run_claim(find(claims, id), b, kDefaultSeed);
    CHECK(r.status == Status::Violated);
    CHECK_FALSE(r.witnesses.empty());
  }
  auto cube = run_claim(find(claims, "C-HYPERCUBE"), b, kDefaultSeed);
  REQUIRE_FALSE(cube.witnesses.empty());
  CHECK(cube.witnesses.front().n == 8);
  CHECK(cube.witnesses.front().observed == "72");
  CHECK(cube.witnesses.front().expected == "76");
  CHECK(cube.violations == 4); // Q_2 agrees
}

TEST_CASE("witnesses: capped, fewest vertices first, then graph6") {
  Claim always = custom({Suite::Exhaustive}, [](const Instance &) { return Outcome::fail("a", "b"); });
  Budget b = Budget::from_max_n(4);
  auto r = run_claim(always, b, 1);
  CHECK(r.instances_tested == 1 + 4 + 38);
  CHECK(r.violations == 43);
  REQUIRE(r.witnesses.size() == kMaxWitnesses);
  CHECK(r.witnesses[0].graph6 == "A_");
  for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
    const auto &p = r.witnesses[i - 1], &q = r.witnesses[i];
    CHECK((p.n < q.n || (p.n == q.n && p.graph6 <= q.graph6)));
  }
  CHECK(r.witnesses[1].n == 3);
}

TEST_CASE("skipped: nothing applicable or predicate throws") {
  Budget b = Budget::from_max_n(4);
  auto none = run_claim(custom({Suite::Named}, [](const Instance &) { return Outcome::skip(); }), b, 1);
  CHECK(none.status == Status::Skipped);
  CHECK(none.instances_tested == 0);
  CHECK_FALSE(none.diagnostic.empty());

  auto boom = run_claim(custom({Suite::Exhaustive},
                               [](const Instance &i) -> Outcome {
                                 if (i.graph.n() == 4)
                                   throw std::runtime_error("boom");
                                 return Outcome::pass();
                               }),
                        b, 1);
  CHECK(boom.status == Status::Skipped);
  CHECK(boom.diagnostic.find("boom") != std::string::npos);
}

TEST_CASE("status invariant and registration matching") {
  ClaimResult r;
  r.expected = Expectation::Holds;
  r.status = Status::Holds;
  CHECK(r.matches_registration());
  r.status = Status::Violated;
  CHECK_FALSE(r.matches_registration());
  r.expected = Expectation::Discrepancy;
  CHECK(r.matches_registration());
  r.status = Status::Skipped;
  CHECK_FALSE(r.matches_registration());

  auto results = run_claims(register_claims(), small_budget(), kDefaultSeed);
  for (const auto &c : results) {
    CAPTURE(c.id);
    CHECK((c.status == Status::Holds) == (c.violations == 0 && c.instances_tested > 0 && c.diagnostic.empty()));
    CHECK(c.matches_registration());
  }
}

TEST_CASE("run_all: selection, determinism, JSON") {
  Budget b = small_budget();
  std::vector<std::string> ids = {"T-PWW-PROD", "SH-DSTAR"};
  Report one = run_all(b, kDefaultSeed, ids);
  CHECK(one.claims.size() == 1);
  CHECK(one.shadow_claims.size() == 1);
  CHECK(one.ok());

  std::vector<std::string> bad = {"NOPE"};
  CHECK_THROWS_AS(run_all(b, kDefaultSeed, bad), Error);

  Budget b1 = b, b3 = b;
  b1.threads = 1;
  b3.threads = 3;
  const std::string j1 = report_json(run_all(b1, 7));
  const std::string j3 = report_json(run_all(b3, 7));
  CHECK(j1 == j3);
  CHECK(j1 == report_json(run_all(b1, 7)));

  auto doc = nlohmann::json::parse(j1);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["seed"] == 7);
  CHECK(doc["claims"].size() == 35);
  CHECK(doc["shadow_claims"].size() == 4);
  CHECK(doc["summary"]["mismatches"] == 0);
  CHECK(doc["summary"]["ok"] == true);
  for (const auto &c : doc["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("status"));
    CHECK(c.contains("expected_status"));
    CHECK(c.contains("instances_tested"));
    CHECK(c.contains("violations"));
    for (const auto &w : c["witnesses"]) {
      CHECK(w.contains("graph6"));
      CHECK(w.contains("observed"));
      CHECK(w.contains("expected"));
    }
  }
  const std::string table = report_table(run_all(b1, 7));
  CHECK(table.find("C-HYPERCUBE") != std::string::npos);
  CHECK(table.find("0 mismatches") != std::string::npos);
}
