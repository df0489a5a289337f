#include <algorithm>
#include <cassert>
#include <numeric>

#include "freesumlab/detail/engine.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/linalg.hpp"

namespace freesumlab::detail {

bool RowSet::contains(const Row& r) const {
  return std::binary_search(rows.begin(), rows.end(), r);
}

void RowSet::sort_unique() {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

Row to_row(const LatticePoint& p) {
  Row r{};
  for (size_t i = 0; i < p.size(); ++i) r[i] = to_i64(p[i]);
  return r;
}

LatticePoint to_point(const Row& r, int dim) {
  LatticePoint p(dim);
  for (int i = 0; i < dim; ++i) p[i] = Int(static_cast<long>(r[i]));
  return p;
}

std::vector<LatticePoint> to_points(const RowSet& s) {
  std::vector<LatticePoint> out;
  out.reserve(s.rows.size());
  for (const Row& r : s.rows) out.push_back(to_point(r, s.dim));
  return out;
}

std::optional<RowSet> to_rows(const std::vector<LatticePoint>& pts, int dim) {
  if (dim > kMaxDim) return std::nullopt;
  RowSet s;
  s.dim = dim;
  s.rows.reserve(pts.size());
  for (const auto& p : pts) {
    for (const Int& x : p)
      if (!fits_i64(x)) return std::nullopt;
    s.rows.push_back(to_row(p));
  }
  return s;
}

Frac reduce(std::int64_t num, std::int64_t den) {
  assert(den > 0 && num >= 0);
  std::int64_t g = std::gcd(num, den);
  if (g == 0) return Frac{0, 1};
  return Frac{num / g, den / g};
}

bool frac_le(const Frac& a, const Frac& b) {
  return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

bool frac_lt(const Frac& a, const Frac& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool frac_sum_le(const Frac& a, const Frac& b, std::int64_t n) {
  // Callers keep n and both denominators under 2^30, so the products fit.
  __int128 lhs = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 rhs = static_cast<__int128>(n) * a.den * b.den;
  return lhs <= rhs;
}

std::optional<I64Facets> to_i64_facets(const std::vector<Facet>& fs) {
  I64Facets out;
  if (fs.empty()) return std::nullopt;
  out.dim = static_cast<int>(fs.front().normal.size());
  if (out.dim > kMaxDim) return std::nullopt;
  for (const Facet& f : fs) {
    for (const Int& x : f.normal)
      if (!fits_i64(x)) return std::nullopt;
    if (!fits_i64(f.offset)) return std::nullopt;
    std::int64_t b = to_i64(f.offset);
    // Offsets bounded so fraction comparisons stay inside 128 bits.
    if (b < 0 || b > (std::int64_t{1} << 30)) return std::nullopt;
    Row nr = to_row(f.normal);
    for (std::int64_t v : nr) out.max_abs_normal = std::max(out.max_abs_normal, std::abs(v));
    out.normals.push_back(nr);
    out.offsets.push_back(b);
  }
  return out;
}

std::optional<Rat> dilation_norm(const std::vector<Facet>& fs, const LatticePoint& z) {
  Rat best(0);
  for (const Facet& f : fs) {
    Int s = dot(f.normal, z);
    if (f.offset == 0) {
      if (s > 0) return std::nullopt;
    } else if (f.offset < 0) {
      throw Error(Errc::internal, "dilation norm needs the origin inside (negative offset)");
    } else if (s > 0) {
      Rat t(s, f.offset);
      t.canonicalize();
      if (t > best) best = t;
    }
  }
  return best;
}

NormResult dilation_norm_i64(const I64Facets& fs, const Row& z) {
  constexpr std::int64_t kNumCap = std::int64_t{1} << 61;
  NormResult res;
  res.certified = true;
  res.finite = true;
  res.value = Frac{0, 1};
  for (size_t fi = 0; fi < fs.normals.size(); ++fi) {
    std::int64_t s = 0;
    for (int j = 0; j < fs.dim; ++j) {
      std::int64_t term;
      if (__builtin_mul_overflow(fs.normals[fi][j], z[j], &term) ||
          __builtin_add_overflow(s, term, &s)) {
        res.certified = false;
        return res;
      }
    }
    if (s > kNumCap || s < -kNumCap) {
      res.certified = false;
      return res;
    }
    std::int64_t b = fs.offsets[fi];
    if (b == 0) {
      if (s > 0) {
        res.finite = false;
        return res;
      }
    } else if (s > 0) {
      Frac t = reduce(s, b);
      if (frac_lt(res.value, t)) res.value = t;
    }
  }
  return res;
}

namespace {

// Shared odometer over the integer box [lo, hi], filtered by the facet
// inequalities normal . z <= n * offset, visiting points in lex order.
template <class Emit>
void scan_box_i64(const std::vector<Row>& normals, const std::vector<std::int64_t>& bounds,
                  const Row& lo, const Row& hi, int dim, Emit&& emit) {
  Row z = lo;
  while (true) {
    bool ok = true;
    for (size_t fi = 0; fi < normals.size() && ok; ++fi) {
      std::int64_t s = 0;
      for (int j = 0; j < dim; ++j) s += normals[fi][j] * z[j];
      ok = s <= bounds[fi];
    }
    if (ok) emit(z);
    int j = dim - 1;
    while (j >= 0 && z[j] == hi[j]) {
      z[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++z[j];
  }
}

template <class Emit>
void scan_box_mpz(const std::vector<Facet>& fs, const Int& n, const IntVector& lo,
                  const IntVector& hi, int dim, Emit&& emit) {
  IntVector z = lo;
  std::vector<Int> bounds;
  bounds.reserve(fs.size());
  for (const Facet& f : fs) bounds.push_back(n * f.offset);
  while (true) {
    bool ok = true;
    for (size_t fi = 0; fi < fs.size() && ok; ++fi) ok = dot(fs[fi].normal, z) <= bounds[fi];
    if (ok) emit(z);
    int j = dim - 1;
    while (j >= 0 && z[j] == hi[j]) {
      z[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++z[j];
  }
}

struct BoxSetup {
  IntVector lo, hi;
  Int volume = 1;
};

BoxSetup dilate_box(const VPolytope& p, const Int& n) {
  const int d = p.ambient_dim();
  BoxSetup b;
  b.lo.assign(d, Int(0));
  b.hi.assign(d, Int(0));
  const auto& vs = p.vertices();
  for (int j = 0; j < d; ++j) {
    Int mn = vs.front()[j], mx = vs.front()[j];
    for (const auto& v : vs) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    b.lo[j] = n * mn;
    b.hi[j] = n * mx;
    b.volume *= b.hi[j] - b.lo[j] + 1;
  }
  return b;
}

void check_box_cap(const BoxSetup& b, const VPolytope& p, const Int& n) {
  if (b.volume > Int(static_cast<long>(enumeration_cap())))
    throw Error(Errc::cap_exceeded,
                "dilate-" + to_string(n) + " search box of " + p.name() + " holds " +
                    to_string(b.volume) + " points, cap is " +
                    std::to_string(enumeration_cap()) +
                    " (raise via FREESUMLAB_MAX_POINTS if intended)");
}

// True when the i64 scan is exact for this instance: box corners and every
// facet accumulation stay well inside 64 bits.
bool certify_i64_scan(const std::vector<Facet>& fs, const Int& n, const BoxSetup& b) {
  const Int lim = (Int(1) << 62);
  for (const Int& x : b.lo)
    if (abs(x) >= lim) return false;
  for (const Int& x : b.hi)
    if (abs(x) >= lim) return false;
  for (const Facet& f : fs) {
    Int acc = 0;
    for (size_t j = 0; j < f.normal.size(); ++j) {
      Int worst = std::max(abs(f.normal[j] * b.lo[j]), abs(f.normal[j] * b.hi[j]));
      acc += worst;
    }
    if (acc >= lim) return false;
    if (abs(n * f.offset) >= lim) return false;
  }
  return true;
}

}  // namespace

std::vector<LatticePoint> enumerate_dilate_generic(const VPolytope& p, const Int& n) {
  const auto& fs = p.facets();
  const int d = p.ambient_dim();
  BoxSetup b = dilate_box(p, n);
  check_box_cap(b, p, n);

  std::vector<LatticePoint> out;
  if (d <= kMaxDim && certify_i64_scan(fs, n, b)) {
    Row lo{}, hi{};
    for (int j = 0; j < d; ++j) {
      lo[j] = to_i64(b.lo[j]);
      hi[j] = to_i64(b.hi[j]);
    }
    std::vector<Row> normals;
    std::vector<std::int64_t> bounds;
    for (const Facet& f : fs) {
      normals.push_back(to_row(f.normal));
      bounds.push_back(to_i64(n * f.offset));
    }
    scan_box_i64(normals, bounds, lo, hi, d,
                 [&](const Row& z) { out.push_back(to_point(z, d)); });
  } else {
    scan_box_mpz(fs, n, b.lo, b.hi, d, [&](const IntVector& z) { out.push_back(z); });
  }
  return out;
}

Int count_dilate_generic(const VPolytope& p, const Int& n) {
  const auto& fs = p.facets();
  const int d = p.ambient_dim();
  BoxSetup b = dilate_box(p, n);
  check_box_cap(b, p, n);

  Int count = 0;
  if (d <= kMaxDim && certify_i64_scan(fs, n, b)) {
    Row lo{}, hi{};
    for (int j = 0; j < d; ++j) {
      lo[j] = to_i64(b.lo[j]);
      hi[j] = to_i64(b.hi[j]);
    }
    std::vector<Row> normals;
    std::vector<std::int64_t> bounds;
    for (const Facet& f : fs) {
      normals.push_back(to_row(f.normal));
      bounds.push_back(to_i64(n * f.offset));
    }
    long long c = 0;
    scan_box_i64(normals, bounds, lo, hi, d, [&](const Row&) { ++c; });
    count = Int(static_cast<long>(c));
  } else {
    scan_box_mpz(fs, n, b.lo, b.hi, d, [&](const IntVector&) { ++count; });
  }
  return count;
}

}  // namespace freesumlab::detail
