#include "pww/formulas.hpp"

#include "pww/error.hpp"
#include "pww/indices.hpp"

namespace pww {

namespace {

Int pow_int(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i)
    r = checked_mul(r, base);
  return r;
}

Int ceil_half(int k) { return (Int{k} + 1) / 2; }

} // namespace

Int pww_complete(int n) { return choose2(n); }

Int pww_star(int leaves) { return 3 * choose2(leaves); }

Int pww_complete_bipartite(int a, int b) {
  return checked_add(checked_add(3 * choose2(b), 3 * choose2(a)), checked_mul(a, b));
}

std::pair<Int, Int> pww_bounds_from_ww(int n, int k, int d, Int ww) {
  const Int outside = checked_sub(choose2(n), choose2(k));
  const Int lower = checked_sub(ww, checked_mul(Int{d} * (d - 1) / 2, outside));
  const Int upper = checked_sub(ww, outside);
  return {lower, upper};
}

Int pww_diameter_two(int n, int k, int m) {
  return checked_sub(checked_add(2 * choose2(n), choose2(k)), 2 * Int{m});
}

std::pair<Int, Int> pw_bounds_large_diameter(int n, int m, int d, int k) {
  const Int N = choose2(n), K = choose2(k), h = ceil_half(k);
  Int lower = checked_sub(checked_sub(checked_mul(d, h), checked_mul(d - 3, N - K)), m);
  Int upper = checked_mul(d - 1, N);
  upper = checked_add(upper, checked_mul(d + 1, K));
  upper = checked_sub(upper, checked_mul(d - 2, m));
  upper = checked_sub(upper, checked_mul(d - 1, h));
  return {lower, upper};
}

std::pair<Int, Int> pww_bounds_large_diameter(int n, int m, int d, int k) {
  const Int N = choose2(n), K = choose2(k), h = ceil_half(k);
  const Int dd1 = Int{d} * (d - 1); // even
  const Int dd2 = Int{d} * (d + 1); // even
  Int lower = checked_mul(dd2 / 2, h);
  lower = checked_add(lower, checked_mul((6 - dd1) / 2, N - K));
  lower = checked_sub(lower, 2 * Int{m});
  Int upper = checked_mul((dd1 - 2) / 2, N);
  upper = checked_add(upper, checked_mul((dd2 + 2) / 2, K));
  upper = checked_sub(upper, checked_mul((2 - dd1) / 2, m));
  upper = checked_sub(upper, checked_mul(dd1 / 2, h));
  return {lower, upper};
}

Int product_pw(int k1, Int pw1, int k2, Int pw2) {
  return checked_add(checked_mul(Int{k2} * k2, pw1), checked_mul(Int{k1} * k1, pw2));
}

Int product_pww(int k1, Int pw1, Int pww1, int k2, Int pw2, Int pww2) {
  Int r = checked_add(checked_mul(Int{k2} * k2, pww1), checked_mul(Int{k1} * k1, pww2));
  return checked_add(r, checked_mul(2, checked_mul(pw1, pw2)));
}

Int hypercube_pww_stated(int d) {
  if (d < 2 || d > 16)
    throw Error(ErrorCode::InvalidParameter, "hypercube formula needs 2 <= d <= 16");
  Int s = 0;
  for (int i = 1; i <= d; ++i)
    s = checked_add(s, checked_mul(pow_int(3, d - i), pow_int(2, d + i - 2)));
  return s;
}

Int hypercube_pww_product_rule(int d) {
  if (d < 2 || d > 16)
    throw Error(ErrorCode::InvalidParameter, "hypercube formula needs 2 <= d <= 16");
  return checked_mul(Int{d} * (d + 3), pow_int(4, d - 2));
}

Int pww_vertex_sum_times4(const DistanceMatrix &dm) {
  Int s = 0;
  for (Vertex v : dm.periphery()) {
    Int dp = peripheral_distance_number(dm, v);
    s = checked_add(s, checked_add(dp, checked_mul(dp, dp)));
  }
  return s;
}

} // namespace pww
