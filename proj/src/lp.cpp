#include "freesumlab/lp.hpp"

#include <cassert>

#include "freesumlab/error.hpp"

namespace freesumlab {

namespace {

// Phase-1 simplex feasibility for A l = b, l >= 0 (b made nonnegative by row
// negation). Bland's rule on both the entering and leaving choice, so the
// iteration cannot cycle. Returns true iff the system is feasible.
bool phase1_feasible(std::vector<RatVector> a, RatVector b) {
  const size_t m = a.size();
  const size_t n = m ? a.front().size() : 0;
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
    }
  }
  // Tableau over variables [0, n) original, [n, n + m) artificial.
  const size_t nv = n + m;
  std::vector<RatVector> t(m, RatVector(nv + 1));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][nv] = b[i];
    basis[i] = n + i;
  }

  auto reduced_cost = [&](size_t j) {
    // c_j - sum over artificial basis rows of t[i][j], with c = indicator of
    // the artificial block.
    Rat r = j >= n ? Rat(1) : Rat(0);
    for (size_t i = 0; i < m; ++i)
      if (basis[i] >= n) r -= t[i][j];
    return r;
  };

  while (true) {
    size_t enter = nv;
    for (size_t j = 0; j < nv; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == nv) break;  // optimal
    size_t leave = m;
    Rat best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][nv] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // Unbounded phase-1 objective cannot happen (it is bounded below by 0).
      throw Error(Errc::internal, "phase-1 simplex claims an unbounded direction");
    }
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= nv; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= nv; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat objective = 0;
  for (size_t i = 0; i < m; ++i)
    if (basis[i] >= n) objective += t[i][nv];
  return objective == 0;
}

bool hull_query(const RatVector& x, const std::vector<IntVector>& points) {
  if (points.empty()) return false;
  const size_t d = x.size();
  for (const auto& p : points)
    if (p.size() != d)
      throw Error(Errc::dimension_mismatch, "hull membership: point lengths differ");
  const size_t n = points.size();
  std::vector<RatVector> a(d + 1, RatVector(n));
  RatVector b(d + 1);
  for (size_t k = 0; k < d; ++k) {
    for (size_t j = 0; j < n; ++j) a[k][j] = Rat(points[j][k]);
    b[k] = x[k];
  }
  for (size_t j = 0; j < n; ++j) a[d][j] = 1;
  b[d] = 1;
  return phase1_feasible(std::move(a), std::move(b));
}

}  // namespace

bool in_convex_hull(const RatVector& x, const std::vector<IntVector>& points) {
  return hull_query(x, points);
}

bool in_convex_hull(const IntVector& x, const std::vector<IntVector>& points) {
  RatVector q(x.size());
  for (size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
  return hull_query(q, points);
}

}  // namespace freesumlab
