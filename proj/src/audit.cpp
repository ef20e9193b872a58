#include "pww/audit.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pww/corpus.hpp"
#include "pww/error.hpp"
#include "pww/generators.hpp"
#include "pww/graph_io.hpp"
#include "pww/rng.hpp"

namespace pww::audit {

std::string_view to_string(Expectation e) { return e == Expectation::Holds ? "Holds" : "Discrepancy"; }

std::string_view to_string(Status s) {
  switch (s) {
  case Status::Holds: return "Holds";
  case Status::Violated: return "Violated";
  case Status::Skipped: return "Skipped";
  }
  return "?";
}

std::string_view to_string(Suite s) {
  switch (s) {
  case Suite::Exhaustive: return "exhaustive";
  case Suite::RandomGraphs: return "random-graphs";
  case Suite::Trees: return "trees";
  case Suite::RandomTrees: return "random-trees";
  case Suite::Products: return "products";
  case Suite::Named: return "named";
  case Suite::Complete: return "complete";
  case Suite::Stars: return "stars";
  case Suite::Bipartite: return "complete-bipartite";
  case Suite::DoubleStars: return "double-stars";
  case Suite::Hypercubes: return "hypercubes";
  case Suite::Caterpillars: return "caterpillars";
  case Suite::Spiders: return "diameter-4-trees";
  case Suite::Lobsters: return "lobsters";
  }
  return "?";
}

Budget Budget::from_max_n(int max_n) {
  Budget b;
  b.max_n = max_n;
  b.max_factor_n = std::min(5, max_n);
  b.max_tree_n = max_n + 3;
  return b;
}

Instance make_instance(Graph g, std::vector<int> params, std::string tag) {
  DistanceMatrix dm = distance_matrix(g);
  IndexVector iv = index_vector(g, dm);
  return Instance{std::move(g), std::move(dm), iv, std::move(params), std::move(tag)};
}

bool ClaimResult::matches_registration() const {
  return expected == Expectation::Holds ? status == Status::Holds : status == Status::Violated;
}

std::size_t Report::mismatches() const {
  std::size_t bad = 0;
  for (const auto &r : claims)
    bad += !r.matches_registration();
  for (const auto &r : shadow_claims)
    bad += !r.matches_registration();
  return bad;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

auto witness_key(const Witness &w) { return std::tie(w.n, w.graph6, w.factors, w.observed, w.expected); }

struct Accumulator {
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
  bool failed = false;
  std::pair<int, std::string> error_key;
  std::string diagnostic;

  void add_witness(Witness w) {
    if (witnesses.size() == kMaxWitnesses && !(witness_key(w) < witness_key(witnesses.back())))
      return;
    auto pos = std::lower_bound(witnesses.begin(), witnesses.end(), w,
                                [](const Witness &a, const Witness &b) { return witness_key(a) < witness_key(b); });
    witnesses.insert(pos, std::move(w));
    if (witnesses.size() > kMaxWitnesses)
      witnesses.pop_back();
  }

  void add_error(int n, std::string g6, std::string what) {
    std::pair<int, std::string> key{n, std::move(g6)};
    if (!failed || key < error_key) {
      failed = true;
      diagnostic = what + " (on " + key.second + ")";
      error_key = std::move(key);
    }
  }

  void merge(Accumulator &&o) {
    tested += o.tested;
    violations += o.violations;
    for (auto &w : o.witnesses)
      add_witness(std::move(w));
    if (o.failed)
      add_error(o.error_key.first, std::move(o.error_key.second), o.diagnostic.substr(0, o.diagnostic.rfind(" (on ")));
  }
};

using ClaimSet = std::vector<std::pair<const Claim *, std::size_t>>; // claim, accumulator slot

void evaluate(const Instance &inst, const ClaimSet &claims, std::vector<Accumulator> &acc) {
  for (const auto &[claim, slot] : claims) {
    auto &a = acc[slot];
    try {
      Outcome o = claim->check(inst);
      if (o.kind == Outcome::Kind::NotApplicable)
        continue;
      ++a.tested;
      if (o.kind == Outcome::Kind::Fail) {
        ++a.violations;
        Witness w{inst.graph.n(), write_graph6(inst.graph), {}, std::move(o.observed), std::move(o.expected)};
        if (inst.left && inst.right)
          w.factors = {write_graph6(inst.left->graph), write_graph6(inst.right->graph)};
        a.add_witness(std::move(w));
      }
    } catch (const std::exception &e) {
      a.add_error(inst.graph.n(), write_graph6(inst.graph), e.what());
    }
  }
}

int team_size(const Budget &b) {
#ifdef _OPENMP
  return b.threads > 0 ? b.threads : omp_get_max_threads();
#else
  (void)b;
  return 1;
#endif
}

int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Runs make(i) -> Instance for i in [0, count) across threads and folds the
// per-thread accumulators back into acc.
template <typename Make>
void parallel_over(std::int64_t count, Make &&make, const ClaimSet &claims, std::vector<Accumulator> &acc,
                   const Budget &budget, int chunk = 64) {
  const int team = team_size(budget);
  std::vector<std::vector<Accumulator>> local(team, std::vector<Accumulator>(acc.size()));
#pragma omp parallel for schedule(dynamic, chunk) num_threads(team)
  for (std::int64_t i = 0; i < count; ++i) {
    auto &mine = local[thread_id()];
    std::optional<Instance> inst;
    try {
      inst = make(i);
    } catch (const std::exception &e) {
      for (const auto &[claim, slot] : claims)
        mine[slot].add_error(0, "#" + std::to_string(i), std::string("instance construction failed: ") + e.what());
      continue;
    }
    if (inst)
      evaluate(*inst, claims, mine);
  }
  for (auto &mine : local)
    for (std::size_t s = 0; s < acc.size(); ++s)
      acc[s].merge(std::move(mine[s]));
}

void run_list(const std::vector<Instance> &list, const ClaimSet &claims, std::vector<Accumulator> &acc,
              const Budget &budget) {
  parallel_over(
      static_cast<std::int64_t>(list.size()),
      [&](std::int64_t i) -> std::optional<Instance> {
        const Instance &src = list[i];
        return Instance{src.graph, src.dm, src.iv, src.params, src.tag, src.left, src.right};
      },
      claims, acc, budget, 8);
}

std::vector<Instance> named_examples() {
  std::vector<Instance> out;
  out.push_back(make_instance(path(2), {}, "P2"));
  out.push_back(make_instance(path(3), {}, "P3"));
  out.push_back(make_instance(star(4), {}, "K1,4"));
  out.push_back(make_instance(build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}), {}, "spider-1-1-2"));
  out.push_back(make_instance(cycle(4), {}, "C4"));
  out.push_back(make_instance(complete(4), {}, "K4"));
  out.push_back(make_instance(hypercube(2), {}, "Q2"));
  return out;
}

std::vector<Instance> family(Suite suite) {
  std::vector<Instance> out;
  switch (suite) {
  case Suite::Complete:
    for (int n = 2; n <= 8; ++n)
      out.push_back(make_instance(complete(n), {n}));
    break;
  case Suite::Stars:
    for (int n = 2; n <= 8; ++n)
      out.push_back(make_instance(star(n), {n}));
    break;
  case Suite::Bipartite:
    for (int a = 2; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        out.push_back(make_instance(complete_bipartite(a, b), {a, b}));
    break;
  case Suite::DoubleStars:
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b)
        out.push_back(make_instance(double_star(a, b), {a, b}));
    break;
  case Suite::Hypercubes:
    for (int d = 2; d <= 6; ++d)
      out.push_back(make_instance(hypercube(d), {d}));
    break;
  case Suite::Caterpillars:
    for (int s = 2; s <= 6; ++s) {
      std::vector<int> code(s, 0);
      // odometer over c_i in 0..4 with c_1, c_s >= 1
      code.front() = 1;
      code.back() = 1;
      while (true) {
        out.push_back(make_instance(caterpillar(CaterpillarCode(code)), code));
        int i = s - 1;
        while (i >= 0) {
          const int lo = (i == 0 || i == s - 1) ? 1 : 0;
          if (++code[i] <= 4)
            break;
          code[i] = lo;
          --i;
        }
        if (i < 0)
          break;
      }
    }
    break;
  case Suite::Spiders:
    // non-increasing tuples with at least two non-zero entries
    for (int s = 2; s <= 4; ++s) {
      std::vector<int> t(s, 0);
      std::function<void(int, int)> rec = [&](int pos, int cap) {
        if (pos == s) {
          if (s >= 2 && t[1] >= 1)
            out.push_back(make_instance(spider_depth2(t), t));
          return;
        }
        for (int v = cap; v >= 0; --v) {
          t[pos] = v;
          rec(pos + 1, v);
        }
      };
      rec(0, 4);
    }
    break;
  case Suite::Lobsters:
    for (int s = 3; s <= 5; ++s) {
      std::vector<int> code(s, 0);
      const int interior = s - 3; // positions 2..s-2 (0-based)
      for (int c1 = 1; c1 <= 3; ++c1)
        for (int cs = 1; cs <= 3; ++cs)
          for (int mid = 0; mid < (interior == 0 ? 1 : (interior == 1 ? 4 : 16)); ++mid)
            for (int c = 1; c <= 3; ++c) {
              code.assign(s, 0);
              code[0] = c1;
              code[s - 1] = cs;
              if (interior >= 1)
                code[2] = mid % 4;
              if (interior >= 2)
                code[3] = mid / 4;
              std::vector<int> params = code;
              params.push_back(c);
              out.push_back(make_instance(lobster(CaterpillarCode(code), c), std::move(params)));
            }
    }
    break;
  default:
    break;
  }
  return out;
}

void run_exhaustive(const ClaimSet &claims, std::vector<Accumulator> &acc, const Budget &budget) {
  for (int n = 2; n <= budget.max_n; ++n) {
    const std::int64_t total = std::int64_t{1} << pair_count(n);
    parallel_over(
        total,
        [n](std::int64_t m) -> std::optional<Instance> {
          const auto mask = static_cast<EdgeMask>(m);
          if (!mask_connected(expand_mask(n, mask)))
            return std::nullopt;
          return make_instance(mask_to_graph(n, mask));
        },
        claims, acc, budget, 1024);
  }
}

std::vector<Instance> random_graphs(const Budget &b, std::uint64_t seed) {
  std::vector<Instance> out;
  const int count = 10 * b.trials;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = splitmix(seed + static_cast<std::uint64_t>(i));
    Rng rng(s);
    const int n = rng.between(2, b.max_random_graph_n);
    const double p = 0.2 + 0.6 * rng.unit();
    out.push_back(make_instance(random_connected_graph(n, p, splitmix(s))));
  }
  return out;
}

std::vector<Instance> random_trees(const Budget &b, std::uint64_t seed) {
  std::vector<Instance> out;
  for (int i = 0; i < b.trials; ++i) {
    const std::uint64_t s = splitmix(seed + static_cast<std::uint64_t>(i));
    Rng rng(s);
    out.push_back(make_instance(random_tree(rng.between(2, b.max_random_tree_n), splitmix(s))));
  }
  return out;
}

std::vector<Instance> all_tree_instances(const Budget &b) {
  std::vector<Instance> out;
  for (int n = 2; n <= b.max_tree_n; ++n)
    for (auto &t : all_trees(n))
      out.push_back(make_instance(std::move(t)));
  return out;
}

void run_products(const ClaimSet &claims, std::vector<Accumulator> &acc, const Budget &b, std::uint64_t seed) {
  std::vector<Instance> factors;
  for (int n = 2; n <= b.max_factor_n; ++n)
    for_each_connected_mask(n, [&](EdgeMask m) { factors.push_back(make_instance(mask_to_graph(n, m))); });
  const auto f = static_cast<std::int64_t>(factors.size());
  parallel_over(
      f * f,
      [&](std::int64_t i) -> std::optional<Instance> {
        const Instance &g = factors[i / f], &h = factors[i % f];
        Instance inst = make_instance(cartesian_product(g.graph, h.graph));
        inst.left = &g;
        inst.right = &h;
        return inst;
      },
      claims, acc, b, 256);

  std::vector<Instance> random_factors;
  random_factors.reserve(2 * static_cast<std::size_t>(b.trials));
  for (int i = 0; i < 2 * b.trials; ++i) {
    const std::uint64_t s = splitmix(seed + static_cast<std::uint64_t>(i));
    Rng rng(s);
    const int n = rng.between(2, 6);
    random_factors.push_back(make_instance(random_connected_graph(n, 0.3 + 0.6 * rng.unit(), splitmix(s))));
  }
  parallel_over(
      b.trials,
      [&](std::int64_t i) -> std::optional<Instance> {
        const Instance &g = random_factors[2 * i], &h = random_factors[2 * i + 1];
        Instance inst = make_instance(cartesian_product(g.graph, h.graph));
        inst.left = &g;
        inst.right = &h;
        return inst;
      },
      claims, acc, b, 16);
}

ClaimResult finish(const Claim &claim, Accumulator &&a) {
  ClaimResult r;
  r.id = claim.id;
  r.description = claim.description;
  r.anchor = claim.anchor;
  r.note = claim.note;
  r.expected = claim.expected;
  r.instances_tested = a.tested;
  r.violations = a.violations;
  r.witnesses = std::move(a.witnesses);
  if (a.failed) {
    r.status = Status::Skipped;
    r.diagnostic = a.diagnostic;
  } else if (a.tested == 0) {
    r.status = Status::Skipped;
    r.diagnostic = "no applicable instances";
  } else {
    r.status = a.violations == 0 ? Status::Holds : Status::Violated;
  }
  return r;
}

} // namespace

std::vector<ClaimResult> run_claims(std::span<const Claim> claims, const Budget &budget, std::uint64_t seed) {
  std::map<Suite, ClaimSet> by_suite;
  for (std::size_t i = 0; i < claims.size(); ++i)
    for (Suite s : claims[i].suites)
      by_suite[s].emplace_back(&claims[i], i);

  std::vector<Accumulator> acc(claims.size());
  for (const auto &[suite, set] : by_suite) {
    const std::uint64_t suite_seed = splitmix(seed ^ (static_cast<std::uint64_t>(suite) + 1) * 0x100000001b3ULL);
    switch (suite) {
    case Suite::Exhaustive:
      run_exhaustive(set, acc, budget);
      break;
    case Suite::RandomGraphs:
      run_list(random_graphs(budget, suite_seed), set, acc, budget);
      break;
    case Suite::Trees:
      run_list(all_tree_instances(budget), set, acc, budget);
      break;
    case Suite::RandomTrees:
      run_list(random_trees(budget, suite_seed), set, acc, budget);
      break;
    case Suite::Products:
      run_products(set, acc, budget, suite_seed);
      break;
    case Suite::Named:
      run_list(named_examples(), set, acc, budget);
      break;
    default:
      run_list(family(suite), set, acc, budget);
      break;
    }
  }

  std::vector<ClaimResult> out;
  out.reserve(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i)
    out.push_back(finish(claims[i], std::move(acc[i])));
  return out;
}

ClaimResult run_claim(const Claim &claim, const Budget &budget, std::uint64_t seed) {
  return std::move(run_claims(std::span<const Claim>(&claim, 1), budget, seed).front());
}

Report run_all(const Budget &budget, std::uint64_t seed, std::span<const std::string> ids) {
  auto registry = register_claims();
  auto shadow = register_shadow_claims();
  std::vector<Claim> selected;
  std::vector<bool> is_shadow;
  if (ids.empty()) {
    for (auto &c : registry) {
      selected.push_back(std::move(c));
      is_shadow.push_back(false);
    }
    for (auto &c : shadow) {
      selected.push_back(std::move(c));
      is_shadow.push_back(true);
    }
  } else {
    for (const auto &id : ids) {
      auto find = [&](std::vector<Claim> &list) {
        return std::find_if(list.begin(), list.end(), [&](const Claim &c) { return c.id == id; });
      };
      if (auto it = find(registry); it != registry.end()) {
        selected.push_back(*it);
        is_shadow.push_back(false);
      } else if (auto jt = find(shadow); jt != shadow.end()) {
        selected.push_back(*jt);
        is_shadow.push_back(true);
      } else {
        throw Error(ErrorCode::InvalidParameter, "unknown claim id: " + id);
      }
    }
  }
  auto results = run_claims(selected, budget, seed);
  Report report;
  report.seed = seed;
  report.budget = budget;
  for (std::size_t i = 0; i < results.size(); ++i)
    (is_shadow[i] ? report.shadow_claims : report.claims).push_back(std::move(results[i]));
  return report;
}

} // namespace pww::audit
