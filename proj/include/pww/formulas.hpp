#pragma once

#include <utility>

#include "pww/checked.hpp"
#include "pww/distance.hpp"

namespace pww {

// General-graph statements evaluated as exact integers. Each takes the
// invariants it needs so the audit can compare against the definitions.

Int pww_complete(int n);                 // C(n,2)
Int pww_star(int leaves);                // 3 C(n,2)
Int pww_complete_bipartite(int a, int b); // 3C(b,2) + 3C(a,2) + ab

// WW - d(d-1)/2 [C(n,2) - C(k,2)] <= PWW <= WW - C(n,2) + C(k,2)
std::pair<Int, Int> pww_bounds_from_ww(int n, int k, int d, Int ww);

Int pww_diameter_two(int n, int k, int m); // 2C(n,2) + C(k,2) - 2m

// Bounds for graphs of diameter d >= 3 in terms of n, m, d, k.
std::pair<Int, Int> pw_bounds_large_diameter(int n, int m, int d, int k);
std::pair<Int, Int> pww_bounds_large_diameter(int n, int m, int d, int k);

// k2^2 PW(G1) + k1^2 PW(G2)
Int product_pw(int k1, Int pw1, int k2, Int pw2);
// k2^2 PWW(G1) + k1^2 PWW(G2) + 2 PW(G1) PW(G2)
Int product_pww(int k1, Int pw1, Int pww1, int k2, Int pw2, Int pww2);

// sum_{i=1..d} 3^{d-i} 2^{d+i-2}, d >= 2
Int hypercube_pww_stated(int d);
// d (d+3) 4^{d-2}, d >= 2: what the product rule gives for Q_d
Int hypercube_pww_product_rule(int d);

// sum over peripheral v of d_P(v) + d_P(v)^2, i.e. four times the
// vertex-sum expression for PWW.
Int pww_vertex_sum_times4(const DistanceMatrix &dm);

} // namespace pww
