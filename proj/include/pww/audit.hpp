#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pww/distance.hpp"
#include "pww/graph.hpp"
#include "pww/indices.hpp"

namespace pww::audit {

enum class Expectation { Holds, Discrepancy };
enum class Status { Holds, Violated, Skipped };

std::string_view to_string(Expectation e);
std::string_view to_string(Status s);

// Instance sources. Random suites draw from the run seed.
enum class Suite {
  Exhaustive,   // every connected labelled graph, 2..max_n vertices
  RandomGraphs, // 10 x trials seeded G(n, p), n <= max_random_graph_n
  Trees,        // every tree up to isomorphism, 2..max_tree_n vertices
  RandomTrees,  // trials uniform labelled trees, n <= max_random_tree_n
  Products,     // all pairs of connected factors <= max_factor_n, plus trials random pairs
  Named,        // small named examples (P_2, P_3, K_{1,4}, ...)
  Complete,     // K_n, 2 <= n <= 8
  Stars,        // K_{1,n}, 2 <= n <= 8
  Bipartite,    // K_{a,b}, 2 <= a <= b <= 6
  DoubleStars,  // S_{a,b}, 1 <= a, b <= 6
  Hypercubes,   // Q_d, 2 <= d <= 6
  Caterpillars, // codes with s <= 6, c_i <= 4
  Spiders,      // depth-2 trees rooted at the centre, <= 4 children with <= 4 leaves each
  Lobsters,     // codes (c_1, 0, c_3, ..., c_s), s <= 5, c_i <= 3, star leaves c <= 3
};

std::string_view to_string(Suite s);

struct Budget {
  int max_n = 7;
  int max_tree_n = 10;
  int max_factor_n = 5;
  int trials = 1000;
  int max_random_tree_n = 40;
  int max_random_graph_n = 12;
  int threads = 0; // <= 0: OpenMP default

  // --max-n N: exhaustive bound N, factors min(5, N), trees N + 3
  static Budget from_max_n(int max_n);
};

struct Instance {
  Graph graph;
  DistanceMatrix dm;
  IndexVector iv;
  std::vector<int> params; // family parameters, empty otherwise
  std::string tag;         // Named suite label
  const Instance *left = nullptr;  // product factors
  const Instance *right = nullptr;
};

// Builds dm and iv; the graph must be connected with n >= 2.
Instance make_instance(Graph g, std::vector<int> params = {}, std::string tag = {});

struct Outcome {
  enum class Kind { NotApplicable, Pass, Fail };
  Kind kind = Kind::NotApplicable;
  std::string observed;
  std::string expected;

  static Outcome skip() { return {}; }
  static Outcome pass() { return {Kind::Pass, {}, {}}; }
  static Outcome fail(std::string observed, std::string expected) {
    return {Kind::Fail, std::move(observed), std::move(expected)};
  }
};

struct Claim {
  std::string id;
  std::string description;
  std::string anchor; // the statement under test, as a formula
  std::vector<Suite> suites;
  Expectation expected = Expectation::Holds;
  std::string note;
  std::function<Outcome(const Instance &)> check;
};

// The published statements, in registry order.
std::vector<Claim> register_claims();
// Corrected variants of the statements expected to fail.
std::vector<Claim> register_shadow_claims();

struct Witness {
  int n = 0;
  std::string graph6;
  std::vector<std::string> factors; // product claims: graph6 of G1, G2
  std::string observed;
  std::string expected;
};

constexpr std::size_t kMaxWitnesses = 10;

struct ClaimResult {
  std::string id;
  std::string description;
  std::string anchor;
  std::string note;
  Expectation expected = Expectation::Holds;
  Status status = Status::Skipped;
  std::uint64_t instances_tested = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses; // fewest vertices first, then graph6 order
  std::string diagnostic;

  // Holds when expected Holds, Violated when expected Discrepancy.
  bool matches_registration() const;
};

struct Report {
  std::uint64_t seed = 0;
  Budget budget;
  std::vector<ClaimResult> claims;
  std::vector<ClaimResult> shadow_claims;

  std::size_t mismatches() const;
  bool ok() const { return mismatches() == 0; }
};

constexpr std::uint64_t kDefaultSeed = 20240521;

ClaimResult run_claim(const Claim &claim, const Budget &budget, std::uint64_t seed);

// Every suite is generated once; all claims that use it are evaluated on
// each instance. Output does not depend on the thread count.
std::vector<ClaimResult> run_claims(std::span<const Claim> claims, const Budget &budget, std::uint64_t seed);

// ids empty: full registry plus shadow claims. Unknown ids throw
// InvalidParameter.
Report run_all(const Budget &budget, std::uint64_t seed, std::span<const std::string> ids = {});

std::string report_json(const Report &report);
std::string report_table(const Report &report);

} // namespace pww::audit
