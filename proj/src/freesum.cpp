#include <algorithm>
#include <cassert>
#include <numeric>

#include "freesumlab/detail/engine.hpp"
#include "freesumlab/detail/polytope_impl.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/linalg.hpp"

namespace freesumlab {

namespace {

std::string display_name(const VPolytope& p, const char* fallback) {
  return p.name().empty() ? fallback : p.name();
}

LatticePoint embed_left(const LatticePoint& x, int total) {
  LatticePoint z(total, Int(0));
  std::copy(x.begin(), x.end(), z.begin());
  return z;
}

LatticePoint embed_right(const LatticePoint& y, int total) {
  LatticePoint z(total, Int(0));
  std::copy(y.begin(), y.end(), z.end() - static_cast<long>(y.size()));
  return z;
}

}  // namespace

VPolytope free_sum(const VPolytope& p, const VPolytope& q) {
  if (!p.valid() || !q.valid())
    throw Error(Errc::invalid_argument, "free sum of an empty polytope value");
  if (!p.contains_origin())
    throw Error(Errc::origin_missing,
                "left factor " + display_name(p, "P") + " does not contain the origin");
  if (!q.contains_origin())
    throw Error(Errc::origin_missing,
                "right factor " + display_name(q, "Q") + " does not contain the origin");

  const int total = p.ambient_dim() + q.ambient_dim();
  std::vector<LatticePoint> points;
  points.reserve(p.vertices().size() + q.vertices().size());
  for (const auto& v : p.vertices()) points.push_back(embed_left(v, total));
  for (const auto& w : q.vertices()) points.push_back(embed_right(w, total));

  std::string name;
  if (!p.name().empty() && !q.name().empty()) name = p.name() + " (+) " + q.name();

  VPolytope f = make_polytope(std::move(points), std::move(name));
  if (f.affine_dim() != p.affine_dim() + q.affine_dim())
    throw Error(Errc::internal, "free sum dimension did not add up: " +
                                    std::to_string(f.affine_dim()) + " vs " +
                                    std::to_string(p.affine_dim()) + "+" +
                                    std::to_string(q.affine_dim()));
  f.impl_->freesum = true;
  f.impl_->left = p;
  f.impl_->right = q;
  return f;
}

namespace {

// Barycentric solver for one witness-set candidate: fixed subset W, queried
// at many lattice points. Selects |W| independent coordinate rows once,
// inverts via the adjugate, and answers each query with multiplications
// plus a residual check on the remaining rows.
class SimplexSolver {
 public:
  explicit SimplexSolver(const std::vector<LatticePoint>& w) : w_(w), k_(w.size()) {
    const int d = static_cast<int>(w.front().size());
    std::vector<IntVector> picked;
    for (int r = 0; r < d && static_cast<int>(rows_.size()) < static_cast<int>(k_); ++r) {
      IntVector row(k_);
      for (size_t j = 0; j < k_; ++j) row[j] = w[j][r];
      picked.push_back(row);
      if (rank(picked) == static_cast<int>(picked.size()))
        rows_.push_back(r);
      else
        picked.pop_back();
    }
    if (rows_.size() != k_)
      throw Error(Errc::not_independent, "witness subset lost rank unexpectedly");

    std::vector<IntVector> m(k_, IntVector(k_));
    for (size_t i = 0; i < k_; ++i)
      for (size_t j = 0; j < k_; ++j) m[i][j] = w[j][rows_[i]];
    det_ = determinant(m);
    adj_.assign(k_, IntVector(k_));
    for (size_t i = 0; i < k_; ++i)
      for (size_t j = 0; j < k_; ++j) {
        std::vector<IntVector> minor;
        for (size_t r = 0; r < k_; ++r) {
          if (r == j) continue;
          IntVector row;
          for (size_t c = 0; c < k_; ++c)
            if (c != i) row.push_back(m[r][c]);
          minor.push_back(row);
        }
        Int cof = minor.empty() ? Int(1) : determinant(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        adj_[i][j] = cof;  // adj = transposed cofactor matrix
      }
  }

  // Coefficients r with W r = z, expressed as numerators over det. Returns
  // false when z is outside the span of W.
  bool solve(const LatticePoint& z, IntVector& nums, Int& coeff_sum) const {
    nums.assign(k_, Int(0));
    for (size_t i = 0; i < k_; ++i)
      for (size_t j = 0; j < k_; ++j) nums[i] += adj_[i][j] * z[rows_[j]];
    const int d = static_cast<int>(z.size());
    size_t next = 0;
    for (int r = 0; r < d; ++r) {
      if (next < rows_.size() && rows_[next] == r) {
        ++next;
        continue;
      }
      Int lhs = 0;
      for (size_t j = 0; j < k_; ++j) lhs += w_[j][r] * nums[j];
      if (lhs != z[r] * det_) return false;
    }
    coeff_sum = 0;
    for (const Int& n : nums) coeff_sum += n;
    return true;
  }

  const Int& det() const { return det_; }

 private:
  const std::vector<LatticePoint>& w_;
  size_t k_;
  std::vector<int> rows_;  // selected coordinate rows, increasing
  Int det_;
  std::vector<IntVector> adj_;
};

// Lattice points in the relative interior of conv(W u {0}), with the
// minimal coefficient sum. Scans the bounding box of the simplex.
std::optional<WitnessSet> inspect_subset(const std::vector<LatticePoint>& w) {
  const int d = static_cast<int>(w.front().size());
  SimplexSolver solver(w);
  const Int& det = solver.det();

  IntVector lo(d, Int(0)), hi(d, Int(0));
  for (const auto& v : w)
    for (int j = 0; j < d; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }

  WitnessSet ws;
  ws.subset = w;
  IntVector nums;
  Int sum;
  LatticePoint z = lo;
  while (true) {
    if (solver.solve(z, nums, sum)) {
      bool inside = true;
      for (const Int& n : nums)
        if (n * det <= 0) {  // r_i > 0, sign-corrected by det
          inside = false;
          break;
        }
      if (inside) {
        // sum/det < 1 with the det sign folded in
        inside = det > 0 ? sum < det : sum > det;
      }
      if (inside) {
        ws.interior_points.push_back(z);
        Rat val(sum, det);
        val.canonicalize();
        if (ws.interior_points.size() == 1 || val < ws.min_value) ws.min_value = val;
      }
    }
    int j = d - 1;
    while (j >= 0 && z[j] == hi[j]) {
      z[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++z[j];
  }

  if (ws.interior_points.empty()) return std::nullopt;
  return ws;
}

void witness_dfs(const std::vector<LatticePoint>& verts, size_t start,
                 std::vector<LatticePoint>& current, int max_size,
                 std::vector<WitnessSet>& out) {
  if (static_cast<int>(current.size()) == max_size) return;
  for (size_t i = start; i < verts.size(); ++i) {
    current.push_back(verts[i]);
    if (rank(current) == static_cast<int>(current.size())) {
      if (auto ws = inspect_subset(current)) out.push_back(std::move(*ws));
      witness_dfs(verts, i + 1, current, max_size, out);
    }
    current.pop_back();
  }
}

}  // namespace

std::vector<WitnessSet> witness_sets(const VPolytope& p) {
  if (!p.valid()) throw Error(Errc::invalid_argument, "witness sets of an empty polytope value");
  if (!p.full_dimensional())
    throw Error(Errc::not_full_dimensional,
                display_name(p, "polytope") + " is " + std::to_string(p.affine_dim()) +
                    "-dimensional in ambient dimension " + std::to_string(p.ambient_dim()));
  if (!p.contains_origin())
    throw Error(Errc::origin_missing,
                display_name(p, "polytope") + " does not contain the origin");

  std::vector<LatticePoint> nonzero;
  for (const auto& v : p.vertices())
    if (!is_zero_vector(v)) nonzero.push_back(v);

  std::vector<WitnessSet> out;
  std::vector<LatticePoint> current;
  witness_dfs(nonzero, 0, current, p.ambient_dim() + 1, out);
  return out;
}

namespace {

bool condition1_direct_impl(const VPolytope& f) {
  const VPolytope& p = f.factor_left();
  const VPolytope& q = f.factor_right();
  const int total = f.ambient_dim();

  std::vector<LatticePoint> embedded;
  for (const auto& x : p.unit_lattice_points()) embedded.push_back(embed_left(x, total));
  for (const auto& y : q.unit_lattice_points()) embedded.push_back(embed_right(y, total));
  std::sort(embedded.begin(), embedded.end());
  embedded.erase(std::unique(embedded.begin(), embedded.end()), embedded.end());

  return f.unit_lattice_points() == embedded;
}

bool condition1_prop_impl(const VPolytope& p, const VPolytope& q) {
  auto wp = witness_sets(p);
  if (wp.empty()) return true;
  auto wq = witness_sets(q);
  if (wq.empty()) return true;
  for (const auto& f : wp)
    for (const auto& g : wq)
      if (f.min_value + g.min_value <= 1) return false;
  return true;
}

}  // namespace

namespace {

// Factor-side data for the embedded-peel IDP scan: lattice points of the
// top dilate with their dilation norms, and the reduced norm after the best
// single degree-one subtraction.
struct PeelSide {
  std::vector<LatticePoint> pts;  // lex order
  std::vector<detail::Frac> norm;
  std::vector<detail::Frac> reduced;
  bool ok = false;
};

PeelSide peel_side(const VPolytope& p, int top) {
  using namespace detail;
  PeelSide side;
  const int d = p.ambient_dim();
  side.pts = lattice_points(p, Int(top));
  auto rows = to_rows(side.pts, d);
  auto fs = to_i64_facets(p.facets());
  auto l1rows = to_rows(p.unit_lattice_points(), d);
  if (!rows || !fs || !l1rows) return side;

  side.norm.reserve(side.pts.size());
  side.reduced.reserve(side.pts.size());
  for (const Row& x : rows->rows) {
    NormResult nr = dilation_norm_i64(*fs, x);
    if (!nr.certified || !nr.finite) return side;
    side.norm.push_back(nr.value);

    bool have = false;
    Frac best{0, 1};
    for (const Row& g : l1rows->rows) {
      Row diff{};
      for (int j = 0; j < d; ++j) diff[j] = x[j] - g[j];
      NormResult red = dilation_norm_i64(*fs, diff);
      if (!red.certified) return side;
      if (!red.finite) continue;
      if (!have || frac_lt(red.value, best)) {
        best = red.value;
        have = true;
      }
    }
    if (!have) return side;  // cannot happen: g = 0 keeps the norm finite
    side.reduced.push_back(best);
  }
  side.ok = true;
  return side;
}

}  // namespace

IdpResult idp_check_freesum_embedded(const VPolytope& f) {
  using namespace detail;
  if (!f.is_free_sum())
    throw Error(Errc::invalid_argument, "embedded IDP scan needs a free sum");
  const int df = f.affine_dim();
  IdpResult res;
  res.levels_checked = std::max(1, df - 1);
  if (res.levels_checked < 2) return res;
  const int top = df - 1;

  PeelSide xs = peel_side(f.factor_left(), top);
  PeelSide ys = peel_side(f.factor_right(), top);
  if (!xs.ok || !ys.ok) return idp_check(f);  // uncertified; generic scan

  // y indices ordered by norm for the threshold windows.
  std::vector<size_t> yord(ys.pts.size());
  std::iota(yord.begin(), yord.end(), size_t{0});
  std::stable_sort(yord.begin(), yord.end(),
                   [&](size_t a, size_t b) { return frac_lt(ys.norm[a], ys.norm[b]); });
  std::vector<Frac> ysorted;
  ysorted.reserve(yord.size());
  for (size_t i : yord) ysorted.push_back(ys.norm[i]);

  auto window = [&](const Frac& t) {
    // first index with t < norm
    return std::upper_bound(ysorted.begin(), ysorted.end(), t,
                            [](const Frac& lhs, const Frac& rhs) { return frac_lt(lhs, rhs); }) -
           ysorted.begin();
  };

  std::vector<size_t> candidates;
  for (int n = 2; n <= top; ++n) {
    for (size_t xi = 0; xi < xs.pts.size(); ++xi) {
      const Frac& a = xs.norm[xi];
      const Frac& ar = xs.reduced[xi];
      // z = (x, y) is in L_n iff beta <= n - alpha. It peels on the left iff
      // beta <= n - 1 - reduced_alpha, and on the right iff
      // reduced_beta <= n - 1 - alpha. Violations live in the window
      // (n-1-reduced_alpha, n-alpha] with reduced_beta too large.
      Frac t1{static_cast<std::int64_t>(n) * a.den - a.num, a.den};
      if (t1.num < 0) continue;  // alpha > n, no y qualifies
      Frac t2{static_cast<std::int64_t>(n - 1) * ar.den - ar.num, ar.den};
      Frac t3{static_cast<std::int64_t>(n - 1) * a.den - a.num, a.den};
      auto lo = window(t2);
      auto hi = window(t1);
      if (lo >= hi) continue;
      candidates.assign(yord.begin() + lo, yord.begin() + hi);
      std::sort(candidates.begin(), candidates.end());
      for (size_t yi : candidates) {
        const Frac& br = ys.reduced[yi];
        if (frac_le(br, t3)) continue;
        LatticePoint z = xs.pts[xi];
        z.insert(z.end(), ys.pts[yi].begin(), ys.pts[yi].end());
        res.idp = false;
        res.witness = DecompositionWitness{Int(n), std::move(z), false, std::nullopt};
        return res;
      }
    }
  }
  return res;
}

bool condition1(const VPolytope& p, const VPolytope& q, Condition1Method method) {
  if (method == Condition1Method::proposition) return condition1_prop_impl(p, q);
  VPolytope f = free_sum(p, q);
  bool direct = condition1_direct_impl(f);
  if (method == Condition1Method::direct) return direct;
  bool prop = condition1_prop_impl(p, q);
  if (direct != prop)
    throw Error(Errc::methods_disagree,
                "condition (1) methods split on (" + display_name(p, "P") + ", " +
                    display_name(q, "Q") + "): direct=" + (direct ? "true" : "false") +
                    " proposition=" + (prop ? "true" : "false"));
  return direct;
}

namespace {

// Hilbert function of the free-sum configuration under condition (1),
// computed from the factor monoids: every degree-n element splits as an
// a-fold sum on the left and a b-fold sum on the right with a + b = n, so
// H(n) counts pairs with first-appearance levels summing to at most n.
struct StructuralHilbert {
  std::vector<Int> values;
  bool ok = false;
};

StructuralHilbert structural_hilbert(const VPolytope& p, const VPolytope& q, int cap) {
  StructuralHilbert sh;
  SumsetScan sx = sumset_scan(p.unit_lattice_points(), cap, true);
  SumsetScan sy = sumset_scan(q.unit_lattice_points(), cap, true);

  std::vector<Int> cx(cap + 1, Int(0)), cy(cap + 1, Int(0));
  for (const auto& [pt, lvl] : sx.first) cx[lvl] += 1;
  for (const auto& [pt, lvl] : sy.first) cy[lvl] += 1;

  std::vector<Int> py(cap + 1, Int(0));  // prefix sums of cy
  Int acc = 0;
  for (int b = 0; b <= cap; ++b) {
    acc += cy[b];
    py[b] = acc;
  }

  sh.values.reserve(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    Int h = 0;
    for (int a = 0; a <= n; ++a)
      if (cx[a] != 0) h += cx[a] * py[n - a];
    sh.values.push_back(h);
  }
  sh.ok = true;
  return sh;
}

struct HTransform {
  Polynomial poly;
  bool stabilized = false;
};

HTransform h_transform(const std::vector<Int>& values, int degree) {
  const int cap = static_cast<int>(values.size()) - 1;
  std::vector<Int> h(cap + 1);
  for (int j = 0; j <= cap; ++j) {
    Int acc = 0;
    for (int k = 0; k <= degree + 1 && k <= j; ++k) {
      Int term = binomial(degree + 1, k) * values[j - k];
      if (k % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h[j] = acc;
  }
  HTransform t;
  t.stabilized = true;
  for (int j = cap - (degree + 1); j <= cap; ++j)
    if (h[j] != 0) t.stabilized = false;
  std::vector<Rat> coeffs(h.begin(), h.end());
  t.poly = Polynomial(std::move(coeffs));
  return t;
}

std::optional<bool> h_multiplicative_check(const VPolytope& p, const VPolytope& q,
                                           const VPolytope& f,
                                           std::vector<std::string>& warnings) {
  const int df = f.affine_dim();
  HilbertData hp = h_polynomial_auto(configuration(p), 2 * p.affine_dim() + 3,
                                     2 * default_h_cap(p.affine_dim()));
  HilbertData hq = h_polynomial_auto(configuration(q), 2 * q.affine_dim() + 3,
                                     2 * default_h_cap(q.affine_dim()));
  if (!hp.stabilized || !hq.stabilized) {
    warnings.push_back("factor h-polynomial window failed to stabilize; "
                       "h_multiplicative left unset");
    return std::nullopt;
  }

  int cap = 2 * df + 3;
  const int max_cap = 2 * default_h_cap(df);
  while (true) {
    StructuralHilbert sh = structural_hilbert(p, q, cap);
    HTransform hf = h_transform(sh.values, df);
    if (hf.stabilized) return hf.poly == hp.h_poly * hq.h_poly;
    if (cap >= max_cap) {
      warnings.push_back("free-sum h window failed to stabilize by cap " +
                         std::to_string(cap) + "; h_multiplicative left unset");
      return std::nullopt;
    }
    cap = std::min(max_cap, cap * 2);
  }
}

}  // namespace

PairReport analyze_pair(const VPolytope& p, const VPolytope& q, const AnalyzeOptions& options) {
  PairReport r;
  r.span_P = spans_full_lattice(p.unit_lattice_points(), p.ambient_dim());
  r.span_Q = spans_full_lattice(q.unit_lattice_points(), q.ambient_dim());
  r.idp_P = idp_check(p).idp;
  r.idp_Q = idp_check(q).idp;
  r.facet_cond_P = facet_b_condition(p);
  r.facet_cond_Q = facet_b_condition(q);

  VPolytope f = free_sum(p, q);
  r.condition1_direct = condition1_direct_impl(f);
  r.condition1_prop = condition1_prop_impl(p, q);
  if (r.condition1_direct != r.condition1_prop)
    throw Error(Errc::methods_disagree,
                "condition (1) methods split on (" + display_name(p, "P") + ", " +
                    display_name(q, "Q") + "): direct=" +
                    (r.condition1_direct ? "true" : "false") +
                    " proposition=" + (r.condition1_prop ? "true" : "false"));
  const bool c1 = r.condition1_direct;

  if (r.span_P && r.span_Q && c1)
    r.predicted_idp_free_sum = (r.idp_P && r.idp_Q) && (r.facet_cond_P || r.facet_cond_Q);
  if (!options.skip_actual)
    r.actual_idp_free_sum = c1 ? idp_check_freesum_embedded(f).idp : idp_check(f).idp;

  r.delta_P = delta_polynomial(p);
  r.delta_Q = delta_polynomial(q);
  r.delta_free_sum = delta_polynomial(f);
  r.delta_multiplicative = r.delta_free_sum == r.delta_P * r.delta_Q;

  if (c1) r.h_multiplicative = h_multiplicative_check(p, q, f, r.warnings);

  bool ok = true;
  if (r.predicted_idp_free_sum && r.actual_idp_free_sum)
    ok = ok && *r.predicted_idp_free_sum == *r.actual_idp_free_sum;
  ok = ok && r.delta_multiplicative == (r.facet_cond_P || r.facet_cond_Q);
  if (r.h_multiplicative) ok = ok && *r.h_multiplicative;
  if (r.actual_idp_free_sum && *r.actual_idp_free_sum) ok = ok && r.idp_P && r.idp_Q;
  r.consistent = ok;
  return r;
}

}  // namespace freesumlab
