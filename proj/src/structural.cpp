#include <algorithm>
#include <cassert>
#include <numeric>

#include "freesumlab/detail/engine.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/linalg.hpp"

// Structural path for dilates of a free sum: with both factors containing
// the origin, (x, y) lies in n*(P (+) Q) exactly when the minimal dilation
// factors satisfy norm_P(x) + norm_Q(y) <= n. So the points of the n-th
// dilate are read off from the factor dilates without scanning the product
// box.

namespace freesumlab::detail {

namespace {

struct SideNorms {
  int dim = 0;
  bool certified = false;          // int64 data usable
  std::vector<Row> rows;           // lex order; only when certified
  std::vector<Frac> fr;            // aligned with rows
  std::vector<LatticePoint> pts;   // lex order; always filled
  std::vector<Rat> ra;             // aligned with pts

  size_t size() const { return pts.size(); }
};

SideNorms side_norms(const VPolytope& p, const Int& n) {
  SideNorms s;
  s.dim = p.ambient_dim();
  s.pts = lattice_points(p, n);
  const auto& fs = p.facets();

  auto rows = to_rows(s.pts, s.dim);
  auto i64fs = to_i64_facets(fs);
  if (rows && i64fs) {
    s.fr.reserve(rows->rows.size());
    bool ok = true;
    for (const Row& r : rows->rows) {
      NormResult nr = dilation_norm_i64(*i64fs, r);
      if (!nr.certified || !nr.finite) {
        ok = false;
        break;
      }
      s.fr.push_back(nr.value);
    }
    if (ok) {
      s.certified = true;
      s.rows = std::move(rows->rows);
      s.ra.reserve(s.fr.size());
      for (const Frac& f : s.fr) {
        Rat r(f.num, f.den);
        r.canonicalize();
        s.ra.push_back(r);
      }
      return s;
    }
    s.fr.clear();
  }

  s.ra.reserve(s.pts.size());
  for (const auto& z : s.pts) {
    auto nrm = dilation_norm(fs, z);
    if (!nrm)
      throw Error(Errc::internal, "enumerated point escapes every dilate of " + p.name());
    s.ra.push_back(*nrm);
  }
  return s;
}

// Indices of ys sorted by norm ascending, ties in lex (input) order.
template <class Norm, class Less>
std::vector<size_t> norm_order(const std::vector<Norm>& norms, Less&& less) {
  std::vector<size_t> order(norms.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return less(norms[a], norms[b]); });
  return order;
}

struct PairPlan {
  SideNorms x, y;
  std::vector<size_t> y_order;
  bool fast = false;               // both sides certified and n small
  std::int64_t n64 = 0;
  std::vector<Frac> y_sorted_fr;   // norms along y_order (fast path)
  std::vector<Rat> y_sorted_ra;    // norms along y_order (reference path)
};

PairPlan plan_pair(const VPolytope& f, const Int& n) {
  PairPlan pl;
  pl.x = side_norms(f.factor_left(), n);
  pl.y = side_norms(f.factor_right(), n);
  pl.fast = pl.x.certified && pl.y.certified && fits_i64(n) && to_i64(n) <= (1LL << 30);
  if (pl.fast) {
    pl.n64 = to_i64(n);
    pl.y_order = norm_order(pl.y.fr, frac_lt);
    pl.y_sorted_fr.reserve(pl.y_order.size());
    for (size_t i : pl.y_order) pl.y_sorted_fr.push_back(pl.y.fr[i]);
  } else {
    pl.y_order = norm_order(pl.y.ra, [](const Rat& a, const Rat& b) { return a < b; });
    pl.y_sorted_ra.reserve(pl.y_order.size());
    for (size_t i : pl.y_order) pl.y_sorted_ra.push_back(pl.y.ra[i]);
  }
  return pl;
}

// Number of sorted y-norms <= n - x_norm, fast path.
size_t admitted_fast(const PairPlan& pl, size_t xi) {
  const Frac& a = pl.x.fr[xi];
  // t = n - a; numerator stays under 2^61 because a <= n <= 2^30, den <= 2^30.
  Frac t{pl.n64 * a.den - a.num, a.den};
  auto it = std::upper_bound(pl.y_sorted_fr.begin(), pl.y_sorted_fr.end(), t,
                             [](const Frac& lhs, const Frac& rhs) { return frac_lt(lhs, rhs); });
  return static_cast<size_t>(it - pl.y_sorted_fr.begin());
}

size_t admitted_ref(const PairPlan& pl, const Int& n, size_t xi) {
  Rat t = Rat(n) - pl.x.ra[xi];
  auto it = std::upper_bound(pl.y_sorted_ra.begin(), pl.y_sorted_ra.end(), t);
  return static_cast<size_t>(it - pl.y_sorted_ra.begin());
}

Int total_admitted(const PairPlan& pl, const Int& n) {
  Int total = 0;
  for (size_t xi = 0; xi < pl.x.size(); ++xi)
    total += Int(static_cast<unsigned long>(pl.fast ? admitted_fast(pl, xi)
                                                    : admitted_ref(pl, n, xi)));
  return total;
}

LatticePoint concat(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<LatticePoint> enumerate_dilate_freesum(const VPolytope& f, const Int& n) {
  PairPlan pl = plan_pair(f, n);
  Int total = total_admitted(pl, n);
  if (total > Int(static_cast<long>(enumeration_cap())))
    throw Error(Errc::cap_exceeded,
                "dilate-" + to_string(n) + " of " + f.name() + " holds " + to_string(total) +
                    " lattice points, cap is " + std::to_string(enumeration_cap()) +
                    " (raise via FREESUMLAB_MAX_POINTS if intended)");

  std::vector<LatticePoint> out;
  out.reserve(static_cast<size_t>(total.get_ui()));
  std::vector<size_t> idx;
  for (size_t xi = 0; xi < pl.x.size(); ++xi) {
    size_t k = pl.fast ? admitted_fast(pl, xi) : admitted_ref(pl, n, xi);
    idx.assign(pl.y_order.begin(), pl.y_order.begin() + k);
    std::sort(idx.begin(), idx.end());
    for (size_t yi : idx) out.push_back(concat(pl.x.pts[xi], pl.y.pts[yi]));
  }
  return out;
}

Int count_dilate_freesum(const VPolytope& f, const Int& n) {
  PairPlan pl = plan_pair(f, n);
  return total_admitted(pl, n);
}

bool freesum_contains(const VPolytope& f, const LatticePoint& z, const Int& n) {
  const VPolytope& p = f.factor_left();
  const VPolytope& q = f.factor_right();
  const int dp = p.ambient_dim();
  LatticePoint zx(z.begin(), z.begin() + dp);
  LatticePoint zy(z.begin() + dp, z.end());

  const auto& pf = p.facets();
  const auto& qf = q.facets();

  if (fits_i64(n) && to_i64(n) <= (1LL << 30)) {
    auto pf64 = to_i64_facets(pf);
    auto qf64 = to_i64_facets(qf);
    auto zx64 = to_rows({zx}, dp);
    auto zy64 = to_rows({zy}, q.ambient_dim());
    if (pf64 && qf64 && zx64 && zy64) {
      NormResult a = dilation_norm_i64(*pf64, zx64->rows.front());
      NormResult b = dilation_norm_i64(*qf64, zy64->rows.front());
      if (a.certified && b.certified) {
        if (!a.finite || !b.finite) return false;
        return frac_sum_le(a.value, b.value, to_i64(n));
      }
    }
  }

  auto a = dilation_norm(pf, zx);
  auto b = dilation_norm(qf, zy);
  if (!a || !b) return false;
  return *a + *b <= Rat(n);
}

}  // namespace freesumlab::detail
