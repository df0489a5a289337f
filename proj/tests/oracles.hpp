// Independent reference implementations used to check the library. These
// deliberately avoid the code paths under test: membership is decided by
// lifted-cone Caratheodory over exact linear solves, never by facet systems
// or box scans, and sumsets are brute std::set unions.
#ifndef FREESUMLAB_TESTS_ORACLES_HPP
#define FREESUMLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "freesumlab/linalg.hpp"
#include "freesumlab/numbers.hpp"

namespace oracle {

using freesumlab::Int;
using freesumlab::IntVector;
using freesumlab::LatticePoint;
using freesumlab::Rat;

inline LatticePoint pt(std::initializer_list<long> cs) {
  LatticePoint p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

inline std::vector<LatticePoint> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<LatticePoint> out;
  for (const auto& r : rows) out.push_back(pt(r));
  return out;
}

// z in n * conv(points)? Lift every generator v to (v, 1) and ask whether
// (z, n) lies in the cone they span: by Caratheodory it does iff some
// linearly independent subset of size <= d+1 carries it with nonnegative
// coefficients.
inline bool contains(const std::vector<LatticePoint>& points, const LatticePoint& z,
                     long n) {
  const size_t d = z.size();
  if (n == 0) return freesumlab::is_zero_vector(z);

  std::vector<IntVector> lifted;
  for (const auto& v : points) {
    IntVector l = v;
    l.emplace_back(1);
    lifted.push_back(std::move(l));
  }
  IntVector target = z;
  target.emplace_back(n);

  const size_t m = lifted.size();
  const size_t k_max = std::min(m, d + 1);
  // subsets by bitmask; point sets in these tests stay small
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    if (static_cast<size_t>(__builtin_popcountl(mask)) > k_max) continue;
    std::vector<IntVector> cols;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) cols.push_back(lifted[i]);
    if (freesumlab::rank(cols) != static_cast<int>(cols.size())) continue;
    auto sol = freesumlab::solve_rational(cols, target);
    if (!sol) continue;
    bool ok = true;
    for (const Rat& c : *sol)
      if (c < 0) ok = false;
    if (ok) return true;
  }
  return false;
}

// Lattice points of n * conv(points), lex order, by scanning the integer
// bounding box.
inline std::vector<LatticePoint> lattice_points(const std::vector<LatticePoint>& points,
                                                long n) {
  std::vector<LatticePoint> out;
  if (points.empty()) return out;
  const size_t d = points[0].size();
  IntVector lo(d), hi(d);
  for (size_t j = 0; j < d; ++j) {
    Int mn = points[0][j], mx = points[0][j];
    for (const auto& p : points) {
      mn = std::min(mn, p[j]);
      mx = std::max(mx, p[j]);
    }
    lo[j] = mn * n;
    hi[j] = mx * n;
  }
  LatticePoint z = lo;
  for (;;) {
    if (contains(points, z, n)) out.push_back(z);
    size_t j = d;
    while (j > 0) {
      --j;
      if (z[j] < hi[j]) {
        ++z[j];
        for (size_t k = j + 1; k < d; ++k) z[k] = lo[k];
        break;
      }
      if (j == 0) return out;  // wrapped past the last box point
    }
    if (d == 0) return out;
  }
}

// Vertex set of conv(points): v is a vertex iff it is not in the hull of the
// others. Returns lex-sorted unique points.
inline std::vector<LatticePoint> vertices(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<LatticePoint> out;
  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<LatticePoint> others;
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (others.empty() || !contains(others, points[i], 1)) out.push_back(points[i]);
  }
  return out;
}

// Sumset chain sizes |S_0|, ..., |S_n| with S_0 = {0}, S_{k+1} = S_k + gens.
inline std::vector<Int> sumset_sizes(const std::vector<LatticePoint>& gens, int n_max) {
  std::vector<Int> sizes;
  std::set<LatticePoint> cur{LatticePoint(gens.empty() ? 0 : gens[0].size(), Int(0))};
  sizes.emplace_back(1);
  for (int n = 1; n <= n_max; ++n) {
    std::set<LatticePoint> next;
    for (const auto& s : cur)
      for (const auto& g : gens) {
        LatticePoint t = s;
        for (size_t j = 0; j < t.size(); ++j) t[j] += g[j];
        next.insert(std::move(t));
      }
    cur = std::move(next);
    sizes.emplace_back(static_cast<long>(cur.size()));
  }
  return sizes;
}

}  // namespace oracle

#endif
