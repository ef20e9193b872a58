#include "pww/audit.hpp"

#include <optional>

#include "pww/checked.hpp"
#include "pww/formulas.hpp"
#include "pww/tree_forms.hpp"

namespace pww::audit {

namespace {

using O = Outcome;

std::string str(Int v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

O equal(Int observed, Int expected) { return observed == expected ? O::pass() : O::fail(str(observed), str(expected)); }

O within(const char *name, Int value, Int lo, Int hi) {
  if (lo <= value && value <= hi)
    return O::pass();
  return O::fail(std::string(name) + "=" + str(value), "[" + str(lo) + ", " + str(hi) + "]");
}

O at_most(const char *lhs, Int a, const char *rhs, Int b) {
  if (a <= b)
    return O::pass();
  return O::fail(std::string(lhs) + "=" + str(a) + ", " + rhs + "=" + str(b), std::string(lhs) + " <= " + rhs);
}

// lhs <=> rhs, both directions on whatever the suite supplies.
O iff(const char *lhs, bool a, const char *rhs, bool b) {
  if (a == b)
    return O::pass();
  return O::fail(std::string(lhs) + ": " + str(a), std::string(rhs) + ": " + str(b));
}

O all(std::initializer_list<O> parts) {
  for (const O &o : parts)
    if (o.kind == O::Kind::Fail)
      return o;
  return O::pass();
}

bool complete_graph(const Instance &i) { return i.graph.m() == choose2(i.graph.n()); }
bool peripheral_graph(const Instance &i) { return i.iv.k == i.graph.n(); }
bool is_tree(const Instance &i) { return i.graph.m() == i.graph.n() - 1; }
int diam(const Instance &i) { return i.dm.diameter(); }

std::optional<TreeView> tree_of(const Instance &i) {
  if (!is_tree(i))
    return std::nullopt;
  return as_tree(i.graph);
}

std::string quarter(Int times4) {
  if (times4 % 4 == 0)
    return str(times4 / 4);
  if (times4 % 2 == 0)
    return str(times4 / 2) + "/2";
  return str(times4) + "/4";
}

Claim make(std::string id, std::string description, std::string anchor, std::vector<Suite> suites,
           std::function<O(const Instance &)> check, Expectation expected = Expectation::Holds,
           std::string note = {}) {
  return Claim{std::move(id), std::move(description), std::move(anchor), std::move(suites), expected,
               std::move(note), std::move(check)};
}

const std::vector<Suite> kGeneral = {Suite::Exhaustive, Suite::RandomGraphs};
const std::vector<Suite> kAllTrees = {Suite::Trees, Suite::RandomTrees};

} // namespace

std::vector<Claim> register_claims() {
  std::vector<Claim> r;
  using S = Suite;

  r.push_back(make("P1-1", "complete graph closed form", "PWW(K_n) = C(n,2)", {S::Complete},
                   [](const Instance &i) { return equal(i.iv.pww, pww_complete(i.params.at(0))); }));
  r.push_back(make("P1-2", "star closed form", "PWW(K_{1,n}) = 3 C(n,2)", {S::Stars},
                   [](const Instance &i) { return equal(i.iv.pww, pww_star(i.params.at(0))); }));
  r.push_back(make("P1-3", "complete bipartite closed form, n >= m >= 2",
                   "PWW(K_{m,n}) = 3 C(n,2) + 3 C(m,2) + nm", {S::Bipartite}, [](const Instance &i) {
                     return equal(i.iv.pww, pww_complete_bipartite(i.params.at(0), i.params.at(1)));
                   }));
  r.push_back(make("P1-4", "lower bound by the number of peripheral vertices, tight only on K_r",
                   "PWW(G) >= C(r,2), r = |Peri(G)|; equality iff G = K_r", kGeneral, [](const Instance &i) {
                     return all({at_most("C(k,2)", choose2(i.iv.k), "PWW", i.iv.pww),
                                 iff("PWW = C(k,2)", i.iv.pww == choose2(i.iv.k), "complete", complete_graph(i))});
                   }));

  r.push_back(make("HASSE-1", "PW below W, equal on peripheral graphs", "PW <= W; equality iff Peri(G) = V(G)",
                   kGeneral, [](const Instance &i) {
                     return all({at_most("PW", i.iv.pw, "W", i.iv.w),
                                 iff("PW = W", i.iv.pw == i.iv.w, "peripheral", peripheral_graph(i))});
                   }));
  r.push_back(make("HASSE-2", "PW below PWW, equal on complete graphs", "PW <= PWW; equality iff G complete",
                   kGeneral, [](const Instance &i) {
                     return all({at_most("PW", i.iv.pw, "PWW", i.iv.pww),
                                 iff("PW = PWW", i.iv.pw == i.iv.pww, "complete", complete_graph(i))});
                   }));
  r.push_back(make("HASSE-3", "PWW below WW, equal on peripheral graphs", "PWW <= WW; equality iff Peri(G) = V(G)",
                   kGeneral, [](const Instance &i) {
                     return all({at_most("PWW", i.iv.pww, "WW", i.iv.ww),
                                 iff("PWW = WW", i.iv.pww == i.iv.ww, "peripheral", peripheral_graph(i))});
                   }));
  r.push_back(make("HASSE-4", "W below WW, equal on complete graphs", "W <= WW; equality iff G complete", kGeneral,
                   [](const Instance &i) {
                     return all({at_most("W", i.iv.w, "WW", i.iv.ww),
                                 iff("W = WW", i.iv.w == i.iv.ww, "complete", complete_graph(i))});
                   }));
  r.push_back(make("EQ-COMPLETE", "the four indices coincide exactly on complete graphs",
                   "G complete iff W = PW = WW = PWW", kGeneral, [](const Instance &i) {
                     const auto &v = i.iv;
                     return iff("W = PW = WW = PWW", v.w == v.pw && v.pw == v.ww && v.ww == v.pww, "complete",
                                complete_graph(i));
                   }));
  r.push_back(make("EQ-P2", "hyper and plain index triples coincide only on P_2",
                   "PWW = WW = TWW iff PW = W = TW iff G = P_2", kGeneral, [](const Instance &i) {
                     const auto &v = i.iv;
                     const bool hyper = v.pww == v.ww && v.ww == v.tww;
                     const bool plain = v.pw == v.w && v.w == v.tw;
                     return all({iff("PWW = WW = TWW", hyper, "PW = W = TW", plain),
                                 iff("PW = W = TW", plain, "n = 2", i.graph.n() == 2)});
                   }));
  r.push_back(make("INCOMP-W-PWW", "W and PWW are incomparable",
                   "W(P_3) = 4 > PWW(P_3) = 3; W(K_{1,4}) = 16 < PWW(K_{1,4}) = 18; W(P_2) = PWW(P_2)", {S::Named},
                   [](const Instance &i) -> O {
                     const auto &v = i.iv;
                     if (i.tag == "P3")
                       return all({equal(v.w, 4), equal(v.pww, 3)});
                     if (i.tag == "K1,4")
                       return all({equal(v.w, 16), equal(v.pww, 18)});
                     if (i.tag == "P2")
                       return equal(v.w, v.pww);
                     return O::skip();
                   }));

  r.push_back(make("T-BOUNDS", "PWW bracketed by WW, n, k and d",
                   "WW - d(d-1)/2 [C(n,2) - C(k,2)] <= PWW <= WW - C(n,2) + C(k,2)", kGeneral,
                   [](const Instance &i) {
                     auto [lo, hi] = pww_bounds_from_ww(i.graph.n(), i.iv.k, diam(i), i.iv.ww);
                     return within("PWW", i.iv.pww, lo, hi);
                   }));
  r.push_back(make("C-DIAM2", "diameter-2 graphs meet both bounds at once", "diam = 2 => PWW = WW - C(n,2) + C(k,2)",
                   kGeneral, [](const Instance &i) {
                     if (diam(i) != 2)
                       return O::skip();
                     return equal(i.iv.pww, i.iv.ww - choose2(i.graph.n()) + choose2(i.iv.k));
                   }));
  r.push_back(make("T-DIAM2", "exact value for diameter 2 from order, size and k",
                   "diam = 2 => PWW = 2 C(n,2) + C(k,2) - 2m", kGeneral, [](const Instance &i) {
                     if (diam(i) != 2)
                       return O::skip();
                     return equal(i.iv.pww, pww_diameter_two(i.graph.n(), i.iv.k, i.graph.m()));
                   }));
  r.push_back(make("FIG2-NONCONVERSE", "the diameter-2 value is reached by a tree of diameter 3",
                   "T = spider (3 legs, one of length 2): PWW(T) = 15 = 2 C(5,2) + C(3,2) - 2*4, diam(T) = 3",
                   {S::Named}, [](const Instance &i) -> O {
                     if (i.tag != "spider-1-1-2")
                       return O::skip();
                     return all({equal(i.iv.pww, 15),
                                 equal(i.iv.pww, pww_diameter_two(i.graph.n(), i.iv.k, i.graph.m())),
                                 diam(i) != 2 ? O::pass() : O::fail("diam = 2", "diam != 2")});
                   }));
  r.push_back(make("T-PW-D3", "PW bounds for diameter at least 3",
                   "d ceil(k/2) - (d-3)[C(n,2)-C(k,2)] - m <= PW <= (d-1)C(n,2) + (d+1)C(k,2) - (d-2)m - "
                   "(d-1)ceil(k/2)",
                   kGeneral, [](const Instance &i) {
                     if (diam(i) < 3)
                       return O::skip();
                     auto [lo, hi] = pw_bounds_large_diameter(i.graph.n(), i.graph.m(), diam(i), i.iv.k);
                     return within("PW", i.iv.pw, lo, hi);
                   }));
  r.push_back(make("T-PWW-D3", "PWW bounds for diameter at least 3",
                   "d(d+1)/2 ceil(k/2) + (6-d(d-1))/2 [C(n,2)-C(k,2)] - 2m <= PWW <= (d(d-1)-2)/2 C(n,2) + "
                   "(d(d+1)+2)/2 C(k,2) - (2-d(d-1))/2 m - d(d-1)/2 ceil(k/2)",
                   kGeneral, [](const Instance &i) {
                     if (diam(i) < 3)
                       return O::skip();
                     auto [lo, hi] = pww_bounds_large_diameter(i.graph.n(), i.graph.m(), diam(i), i.iv.k);
                     return within("PWW", i.iv.pww, lo, hi);
                   }));

  r.push_back(make("L-PROD-DIST", "distances in a cartesian product add coordinatewise",
                   "d((u1,u2),(v1,v2)) = d(u1,v1) + d(u2,v2)", {S::Products}, [](const Instance &i) -> O {
                     if (!i.left || !i.right)
                       return O::skip();
                     const auto &d1 = i.left->dm, &d2 = i.right->dm;
                     const int n1 = i.left->graph.n(), n2 = i.right->graph.n();
                     for (int a = 0; a < n1; ++a)
                       for (int x = 0; x < n2; ++x)
                         for (int b = 0; b < n1; ++b)
                           for (int y = 0; y < n2; ++y) {
                             const int got = i.dm.at(a * n2 + x, b * n2 + y);
                             if (got != d1.at(a, b) + d2.at(x, y))
                               return O::fail("d=" + std::to_string(got) + " at (" + std::to_string(a * n2 + x) +
                                                  "," + std::to_string(b * n2 + y) + ")",
                                              std::to_string(d1.at(a, b) + d2.at(x, y)));
                           }
                     return O::pass();
                   }));
  r.push_back(make("C-PROD-PERI", "periphery of a product is the product of peripheries",
                   "Peri(G1 x G2) = Peri(G1) x Peri(G2)", {S::Products}, [](const Instance &i) -> O {
                     if (!i.left || !i.right)
                       return O::skip();
                     const int n2 = i.right->graph.n();
                     std::vector<Vertex> want;
                     for (Vertex a : i.left->dm.periphery())
                       for (Vertex x : i.right->dm.periphery())
                         want.push_back(a * n2 + x);
                     if (want == i.dm.periphery())
                       return O::pass();
                     return O::fail("|Peri| = " + std::to_string(i.dm.periphery().size()),
                                    "|Peri| = " + std::to_string(want.size()));
                   }));
  r.push_back(make("T-PW-PROD", "PW of a cartesian product", "PW(G1 x G2) = k2^2 PW(G1) + k1^2 PW(G2)",
                   {S::Products}, [](const Instance &i) -> O {
                     if (!i.left || !i.right)
                       return O::skip();
                     const auto &a = i.left->iv, &b = i.right->iv;
                     return equal(i.iv.pw, product_pw(a.k, a.pw, b.k, b.pw));
                   }));
  r.push_back(make("T-PWW-PROD", "PWW of a cartesian product",
                   "PWW(G1 x G2) = k2^2 PWW(G1) + k1^2 PWW(G2) + 2 PW(G1) PW(G2)", {S::Products},
                   [](const Instance &i) -> O {
                     if (!i.left || !i.right)
                       return O::skip();
                     const auto &a = i.left->iv, &b = i.right->iv;
                     return equal(i.iv.pww, product_pww(a.k, a.pw, a.pww, b.k, b.pw, b.pww));
                   }));
  r.push_back(make("C-HYPERCUBE", "hypercube closed form",
                   "PWW(Q_d) = sum_{i=1..d} 3^(d-i) 2^(d+i-2), via PWW(Q_d) = 6 PWW(Q_(d-1)) + 2^(2d-2)",
                   {S::Hypercubes},
                   [](const Instance &i) { return equal(i.iv.pww, hypercube_pww_stated(i.params.at(0))); },
                   Expectation::Discrepancy,
                   "the recursion starts from Q_2 taken as K_4, but K_2 x K_2 is C_4; the product rule gives "
                   "PWW(Q_d) = 4 PWW(Q_(d-1)) + 2 PW(Q_(d-1)) + 4^(d-1), so Q_3 has 72 where the sum gives 76"));

  r.push_back(make("T-PW-TREE", "PW of a tree by edge cuts", "PW(T) = sum_e a1(e) a2(e)", kAllTrees,
                   [](const Instance &i) -> O {
                     auto t = tree_of(i);
                     if (!t)
                       return O::skip();
                     return equal(peripheral_wiener_by_edge_cuts(*t), i.iv.pw);
                   }));
  r.push_back(make("T-PWW-TREE", "PWW of a tree by path cuts", "PWW(T) = sum_{u,v} a1(pi_uv) a2(pi_uv)", kAllTrees,
                   [](const Instance &i) -> O {
                     auto t = tree_of(i);
                     if (!t)
                       return O::skip();
                     return equal(peripheral_hyper_wiener_by_path_cuts(*t), i.iv.pww);
                   }));
  r.push_back(make("T-TREE-BOUNDS-LO", "lower bound for trees, tight only at d = 2",
                   "k C(d+2k-3, 2) <= PWW(T); equality iff d = 2", kAllTrees,
                   [](const Instance &i) -> O {
                     if (!is_tree(i))
                       return O::skip();
                     const Int lo = tree_pww_bounds(diam(i), i.iv.k).first;
                     return all({at_most("k C(d+2k-3,2)", lo, "PWW", i.iv.pww),
                                 iff("PWW = bound", i.iv.pww == lo, "d = 2", diam(i) == 2)});
                   },
                   Expectation::Discrepancy, "fails already on P_2 (bound 2, PWW 1) and on every path"));
  r.push_back(make("T-TREE-BOUNDS-HI", "upper bound for trees", "PWW(T) <= 4 C(d+1, 2) C(k, 2)", kAllTrees,
                   [](const Instance &i) -> O {
                     if (!is_tree(i))
                       return O::skip();
                     return at_most("PWW", i.iv.pww, "4 C(d+1,2) C(k,2)", tree_pww_bounds(diam(i), i.iv.k).second);
                   },
                   Expectation::Holds,
                   "the inequality only; with the factor 4 the bound is never attained, the sharpness "
                   "statement is audited on the pairwise bound in SH-TREE-BOUNDS-HI"));
  r.push_back(make("T-STAR", "trees of diameter 2", "diam(T) = 2 => PWW(T) = 3 C(n-1, 2)", {S::Trees, S::Stars},
                   [](const Instance &i) -> O {
                     if (!is_tree(i) || diam(i) != 2)
                       return O::skip();
                     return equal(i.iv.pww, closed_form_star(i.graph.n() - 1));
                   }));
  r.push_back(make("T-DSTAR", "double stars", "PWW(S_{m,n}) = 6mn + 3m + 3n", {S::Trees, S::DoubleStars},
                   [](const Instance &i) -> O {
                     auto t = tree_of(i);
                     if (!t || diam(i) != 3)
                       return O::skip();
                     auto [a, b] = double_star_parameters(*t);
                     return equal(i.iv.pww, closed_form_double_star(a, b));
                   },
                   Expectation::Discrepancy, "P_4 = S_{1,1} has PWW 6, the form gives 12"));
  r.push_back(make("P-DIAM4", "trees of diameter 4 by grandchildren of the centre",
                   "PWW(T) = 10 sum_{i<j} |C_i||C_j| + 3 sum_i C(|C_i|, 2)", {S::Trees, S::Spiders},
                   [](const Instance &i) -> O {
                     auto t = tree_of(i);
                     if (!t || diam(i) != 4)
                       return O::skip();
                     return equal(i.iv.pww, closed_form_diam4(diam4_children_counts(*t)));
                   }));
  r.push_back(make("L-DIAM-COMP", "large diameter forces a small complement", "diam(G) >= 4 => diam(complement) <= 2",
                   kGeneral, [](const Instance &i) -> O {
                     if (diam(i) < 4)
                       return O::skip();
                     Graph c = complement(i.graph);
                     if (!is_connected(c))
                       return O::fail("complement disconnected", "diam <= 2");
                     const int d = distance_matrix(c).diameter();
                     return d <= 2 ? O::pass() : O::fail("diam = " + std::to_string(d), "diam <= 2");
                   }));
  r.push_back(make("T-COMP-TREE", "PWW of a connected tree complement",
                   "PWW(co-T) = 6 iff diam(T) = 3; PWW(co-T) = (n^2 + 3n - 4)/2 iff diam(T) > 3", {S::Trees},
                   [](const Instance &i) -> O {
                     auto t = tree_of(i);
                     if (!t)
                       return O::skip();
                     auto c = complement_tree_pww(*t);
                     if (!c)
                       return O::skip();
                     const Int n = i.graph.n();
                     return all({iff("PWW(co-T) = 6", *c == 6, "diam = 3", diam(i) == 3),
                                 iff("PWW(co-T) = (n^2+3n-4)/2", 2 * *c == n * n + 3 * n - 4, "diam > 3",
                                     diam(i) > 3)});
                   }));
  r.push_back(make("T-CATERPILLAR", "caterpillars by code",
                   "PWW = 3 C(c_1,2) + 3 C(c_s,2) + c_1 c_s (s+1)(s+2)/2", {S::Caterpillars},
                   [](const Instance &i) {
                     return equal(i.iv.pww, closed_form_caterpillar(CaterpillarCode(i.params)));
                   }));
  r.push_back(make("T-LOBSTER", "caterpillar (c_1, 0, c_3, ..., c_s) with a star K_{1,c} hung from u_2",
                   "PWW = 3 C(c_1,2) + 3 C(c_s,2) + 3 C(c,2) + 10 c_1 c + c_s (c_1 + c)(s+1)(s+2)", {S::Lobsters},
                   [](const Instance &i) {
                     std::vector<int> code(i.params.begin(), i.params.end() - 1);
                     return equal(i.iv.pww, closed_form_lobster(CaterpillarCode(code), i.params.back()));
                   },
                   Expectation::Discrepancy, "the last term counts each end-to-end pair twice"));
  r.push_back(make("DEF-PWW-ALT", "vertex-sum expression for PWW",
                   "PWW = 1/4 sum_{v in Peri} (d_P(v) + d_P(v)^2)", {S::Exhaustive, S::Named},
                   [](const Instance &i) {
                     const Int alt = pww_vertex_sum_times4(i.dm);
                     if (alt == 4 * i.iv.pww)
                       return O::pass();
                     return O::fail(str(i.iv.pww), quarter(alt));
                   },
                   Expectation::Discrepancy,
                   "squares a sum of distances instead of summing squares; observed is the pair sum"));
  r.push_back(make("OBS-NO-2-5", "2 and 5 are not PWW values", "PWW(G) not in {2, 5}", {S::Exhaustive},
                   [](const Instance &i) {
                     return i.iv.pww == 2 || i.iv.pww == 5 ? O::fail(str(i.iv.pww), "not 2 or 5") : O::pass();
                   },
                   Expectation::Holds, "read as a statement about PWW; WW(P_3) = 5"));
  return r;
}

std::vector<Claim> register_shadow_claims() {
  std::vector<Claim> r;
  using S = Suite;
  r.push_back(make("SH-HYPERCUBE", "hypercube by the product rule",
                   "PW(Q_d) = d 4^(d-1); PWW(Q_d) = d(d+3) 4^(d-2) = 4 PWW(Q_(d-1)) + 2 PW(Q_(d-1)) + 4^(d-1)",
                   {S::Hypercubes}, [](const Instance &i) {
                     const int d = i.params.at(0);
                     Int pw = d;
                     for (int j = 1; j < d; ++j)
                       pw *= 4;
                     O rec = O::pass();
                     if (d >= 3) {
                       Int prev_pw = pw / 4 / d * (d - 1), step = pw / d;
                       rec = equal(i.iv.pww, 4 * hypercube_pww_product_rule(d - 1) + 2 * prev_pw + step);
                     }
                     return all({equal(i.iv.pw, pw), equal(i.iv.pww, hypercube_pww_product_rule(d)), rec});
                   }));
  r.push_back(make("SH-DSTAR", "double stars, pair count form", "PWW(S_{m,n}) = 6mn + 3 C(m,2) + 3 C(n,2)",
                   {S::Trees, S::DoubleStars}, [](const Instance &i) -> O {
                     auto t = tree_of(i);
                     if (!t || diam(i) != 3)
                       return O::skip();
                     auto [a, b] = double_star_parameters(*t);
                     return equal(i.iv.pww, closed_form_double_star_corrected(a, b));
                   }));
  r.push_back(make("SH-LOBSTER", "lobster with the end-to-end term halved",
                   "PWW = 3 C(c_1,2) + 3 C(c_s,2) + 3 C(c,2) + 10 c_1 c + c_s (c_1 + c)(s+1)(s+2)/2", {S::Lobsters},
                   [](const Instance &i) {
                     std::vector<int> code(i.params.begin(), i.params.end() - 1);
                     return equal(i.iv.pww, closed_form_lobster_corrected(CaterpillarCode(code), i.params.back()));
                   }));
  r.push_back(make("SH-TREE-BOUNDS-HI", "pairwise upper bound for trees, tight iff all peripheral pairs are at distance d",
                   "PWW(T) <= C(d+1,2) C(k,2); equality iff d(u,v) = d on Peri", {S::Trees, S::RandomTrees},
                   [](const Instance &i) -> O {
                     if (!is_tree(i))
                       return O::skip();
                     const Int hi = tree_pww_upper_bound_pairwise(diam(i), i.iv.k);
                     const auto &p = i.dm.periphery();
                     bool all_far = true;
                     for (std::size_t a = 0; a < p.size() && all_far; ++a)
                       for (std::size_t b = a + 1; b < p.size(); ++b)
                         if (i.dm.at(p[a], p[b]) != diam(i)) {
                           all_far = false;
                           break;
                         }
                     return all({at_most("PWW", i.iv.pww, "C(d+1,2) C(k,2)", hi),
                                 iff("PWW = bound", i.iv.pww == hi, "all peripheral pairs at distance d", all_far)});
                   }));
  return r;
}

} // namespace pww::audit
