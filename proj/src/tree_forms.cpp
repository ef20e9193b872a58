#include "pww/tree_forms.hpp"

#include <algorithm>

#include "pww/error.hpp"
#include "pww/indices.hpp"

namespace pww {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorCode::InvalidParameter, what); }

void require_lobster(const CaterpillarCode &code, int c) {
  if (code.spine_length() < 3 || code.count(1) != 0 || c < 1)
    throw Error(ErrorCode::InvalidCode, "lobster needs s >= 3, c_2 = 0 and c >= 1");
}

} // namespace

TreeView as_tree(Graph g) {
  if (!is_connected(g))
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  if (g.m() != g.n() - 1)
    throw Error(ErrorCode::NotATree, "graph is not a tree");
  DistanceMatrix dm = distance_matrix(g);
  TreeView t(std::move(g), std::move(dm));
  const int n = t.graph_.n();
  t.parent_.assign(n, -1);
  t.order_.reserve(n);
  t.order_.push_back(0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < t.order_.size(); ++head) {
    Vertex v = t.order_[head];
    for (Vertex w : t.graph_.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        t.parent_[w] = v;
        t.order_.push_back(w);
      }
  }
  t.peripheral_.assign(n, 0);
  t.pendant_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    t.peripheral_[v] = t.dm_.is_peripheral(v);
    t.pendant_[v] = t.graph_.degree(v) == 1;
  }
  return t;
}

std::vector<EdgeSides> edge_sides(const TreeView &t) {
  const int n = t.n();
  const Int k = t.k();
  std::vector<Int> size(n, 1), peri(n, 0);
  for (Vertex v = 0; v < n; ++v)
    peri[v] = t.peripheral(v) ? 1 : 0;
  const auto &order = t.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex p = t.parent(*it);
    if (p >= 0) {
      size[p] += size[*it];
      peri[p] += peri[*it];
    }
  }
  std::vector<EdgeSides> out;
  out.reserve(n - 1);
  for (Vertex v : order) {
    if (t.parent(v) < 0)
      continue;
    out.push_back({t.parent(v), v, size[v], n - size[v], peri[v], k - peri[v]});
  }
  return out;
}

PathSides path_sides(const TreeView &t, Vertex u, Vertex v) {
  const auto &dm = t.distances();
  const int duv = dm.at(u, v);
  PathSides s;
  for (Vertex x = 0; x < t.n(); ++x) {
    const int p = t.peripheral(x) ? 1 : 0;
    if (dm.at(x, v) == dm.at(x, u) + duv) {
      ++s.n1;
      s.a1 += p;
    } else if (dm.at(x, u) == dm.at(x, v) + duv) {
      ++s.n2;
      s.a2 += p;
    }
  }
  return s;
}

Int wiener_by_edge_cuts(const TreeView &t) {
  Int total = 0;
  for (const auto &e : edge_sides(t))
    total = checked_add(total, checked_mul(e.n1, e.n2));
  return total;
}

Int peripheral_wiener_by_edge_cuts(const TreeView &t) {
  Int total = 0;
  for (const auto &e : edge_sides(t))
    total = checked_add(total, checked_mul(e.a1, e.a2));
  return total;
}

Int hyper_wiener_by_path_cuts(const TreeView &t) {
  Int total = 0;
  for (Vertex u = 0; u < t.n(); ++u)
    for (Vertex v = u + 1; v < t.n(); ++v) {
      auto s = path_sides(t, u, v);
      total = checked_add(total, checked_mul(s.n1, s.n2));
    }
  return total;
}

Int peripheral_hyper_wiener_by_path_cuts(const TreeView &t) {
  Int total = 0;
  for (Vertex u = 0; u < t.n(); ++u)
    for (Vertex v = u + 1; v < t.n(); ++v) {
      auto s = path_sides(t, u, v);
      total = checked_add(total, checked_mul(s.a1, s.a2));
    }
  return total;
}

Int closed_form_star(int leaves) {
  if (leaves < 2)
    bad("star closed form needs >= 2 leaves");
  return 3 * choose2(leaves);
}

Int closed_form_double_star(int a, int b) {
  if (a < 1 || b < 1)
    bad("double star closed form needs a, b >= 1");
  return checked_add(checked_mul(6, checked_mul(a, b)), checked_add(3 * Int{a}, 3 * Int{b}));
}

Int closed_form_double_star_corrected(int a, int b) {
  if (a < 1 || b < 1)
    bad("double star closed form needs a, b >= 1");
  return checked_add(checked_mul(6, checked_mul(a, b)), checked_add(3 * choose2(a), 3 * choose2(b)));
}

Int closed_form_diam4(std::span<const int> children) {
  int nonempty = 0;
  for (int c : children) {
    if (c < 0)
      bad("diameter-4 closed form: negative child count");
    nonempty += c > 0;
  }
  if (nonempty < 2)
    bad("diameter-4 closed form needs two children with grandchildren");
  Int cross = 0, within = 0, prefix = 0;
  for (int c : children) {
    cross = checked_add(cross, checked_mul(prefix, c));
    prefix += c;
    within = checked_add(within, choose2(c));
  }
  return checked_add(checked_mul(10, cross), checked_mul(3, within));
}

Int closed_form_caterpillar(const CaterpillarCode &code) {
  const Int s = code.spine_length();
  if (s < 2)
    throw Error(ErrorCode::InvalidCode, "caterpillar closed form needs s >= 2");
  const Int c1 = code.count(0), cs = code.count(static_cast<int>(s - 1));
  // c1 cs (s+1)(s+2) is even: (s+1)(s+2) is a product of consecutive integers.
  Int tail = checked_mul(checked_mul(c1, cs), checked_mul(s + 1, s + 2)) / 2;
  return checked_add(checked_add(3 * choose2(c1), 3 * choose2(cs)), tail);
}

Int closed_form_lobster(const CaterpillarCode &code, int c) {
  require_lobster(code, c);
  const Int s = code.spine_length();
  const Int c1 = code.count(0), cs = code.count(static_cast<int>(s - 1));
  Int head = checked_add(checked_add(3 * choose2(c1), 3 * choose2(cs)), 3 * choose2(c));
  Int mixed = checked_mul(10, checked_mul(c1, c));
  Int tail = checked_mul(checked_mul(cs, c1 + c), checked_mul(s + 1, s + 2));
  return checked_add(checked_add(head, mixed), tail);
}

Int closed_form_lobster_corrected(const CaterpillarCode &code, int c) {
  require_lobster(code, c);
  const Int s = code.spine_length();
  const Int c1 = code.count(0), cs = code.count(static_cast<int>(s - 1));
  Int head = checked_add(checked_add(3 * choose2(c1), 3 * choose2(cs)), 3 * choose2(c));
  Int mixed = checked_mul(10, checked_mul(c1, c));
  Int tail = checked_mul(checked_mul(cs, c1 + c), checked_mul(s + 1, s + 2)) / 2;
  return checked_add(checked_add(head, mixed), tail);
}

std::pair<Int, Int> tree_pww_bounds(int d, int k) {
  if (d < 1 || k < 2)
    bad("tree bounds need d >= 1 and k >= 2");
  Int lower = checked_mul(k, choose2(Int{d} + 2 * Int{k} - 3));
  Int upper = checked_mul(4, checked_mul(choose2(Int{d} + 1), choose2(k)));
  return {lower, upper};
}

Int tree_pww_upper_bound_pairwise(int d, int k) {
  if (d < 1 || k < 2)
    bad("tree bounds need d >= 1 and k >= 2");
  return checked_mul(choose2(Int{d} + 1), choose2(k));
}

std::pair<int, int> double_star_parameters(const TreeView &t) {
  const auto &dm = t.distances();
  if (dm.diameter() != 3 || dm.center().size() != 2)
    bad("not a diameter-3 tree");
  Vertex a = dm.center()[0], b = dm.center()[1];
  return {t.graph().degree(a) - 1, t.graph().degree(b) - 1};
}

std::vector<int> diam4_children_counts(const TreeView &t) {
  const auto &dm = t.distances();
  if (dm.diameter() != 4 || dm.center().size() != 1)
    bad("not a diameter-4 tree");
  Vertex root = dm.center()[0];
  std::vector<int> counts;
  for (Vertex c : t.graph().neighbors(root))
    counts.push_back(t.graph().degree(c) - 1);
  return counts;
}

std::optional<Int> complement_tree_pww(const TreeView &t) {
  Graph c = complement(t.graph());
  if (!is_connected(c))
    return std::nullopt;
  return peripheral_hyper_wiener(distance_matrix(c));
}

} // namespace pww
