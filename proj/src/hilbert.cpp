#include <algorithm>
#include <cassert>
#include <queue>

#include "freesumlab/detail/engine.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/hilbert.hpp"
#include "freesumlab/linalg.hpp"

namespace freesumlab {

namespace {

// Flat row-major matrix of int64 lattice points; avoids per-point
// allocations in the sumset merges.
struct FlatPoints {
  int dim = 0;
  std::vector<std::int64_t> data;

  size_t size() const { return dim == 0 ? 0 : data.size() / dim; }
  const std::int64_t* row(size_t i) const { return data.data() + i * dim; }
  void push(const std::int64_t* p) { data.insert(data.end(), p, p + dim); }
};

int cmp_rows(const std::int64_t* a, const std::int64_t* b, int dim) {
  for (int j = 0; j < dim; ++j) {
    if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
  }
  return 0;
}

// One pass of S + gens via a k-way merge over the shifted copies of S.
FlatPoints sumset_step(const FlatPoints& s, const FlatPoints& gens) {
  FlatPoints out;
  out.dim = s.dim;
  const size_t k = gens.size();
  if (s.size() == 0 || k == 0) return out;

  std::vector<size_t> cursor(k, 0);
  std::vector<std::int64_t> key(k * s.dim);
  auto load = [&](size_t g) {
    const std::int64_t* p = s.row(cursor[g]);
    const std::int64_t* a = gens.row(g);
    for (int j = 0; j < s.dim; ++j) key[g * s.dim + j] = p[j] + a[j];
  };
  for (size_t g = 0; g < k; ++g) load(g);

  auto heap_less = [&](size_t a, size_t b) {
    // std::priority_queue is a max-heap; invert for min extraction.
    int c = cmp_rows(&key[a * s.dim], &key[b * s.dim], s.dim);
    if (c != 0) return c > 0;
    return a > b;
  };
  std::priority_queue<size_t, std::vector<size_t>, decltype(heap_less)> heap(heap_less);
  for (size_t g = 0; g < k; ++g) heap.push(g);

  while (!heap.empty()) {
    size_t g = heap.top();
    heap.pop();
    const std::int64_t* v = &key[g * s.dim];
    if (out.size() == 0 || cmp_rows(out.row(out.size() - 1), v, s.dim) != 0) out.push(v);
    if (++cursor[g] < s.size()) {
      load(g);
      heap.push(g);
    }
  }
  return out;
}

std::optional<FlatPoints> flatten(const std::vector<LatticePoint>& pts, int dim) {
  FlatPoints f;
  f.dim = dim;
  f.data.reserve(pts.size() * dim);
  for (const auto& p : pts) {
    for (const Int& x : p) {
      if (!fits_i64(x)) return std::nullopt;
      f.data.push_back(to_i64(x));
    }
  }
  return f;
}

// Largest coordinate magnitude; certifies n_max-fold sums stay in range.
bool certify_sums(const FlatPoints& gens, int n_max) {
  std::int64_t c = 0;
  for (std::int64_t v : gens.data) c = std::max(c, std::abs(v));
  return c <= (std::int64_t{1} << 60) / std::max(1, n_max);
}

std::vector<LatticePoint> sum_all_mpz(const std::vector<LatticePoint>& s,
                                      const std::vector<LatticePoint>& gens) {
  std::vector<LatticePoint> out;
  out.reserve(s.size() * gens.size());
  for (const auto& p : s)
    for (const auto& a : gens) {
      LatticePoint q(p.size());
      for (size_t j = 0; j < p.size(); ++j) q[j] = p[j] + a[j];
      out.push_back(std::move(q));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Configuration configuration(const VPolytope& p) {
  Configuration a;
  a.ambient = p.ambient_dim() + 1;
  a.degree = p.affine_dim();
  for (const auto& z : p.unit_lattice_points()) {
    LatticePoint lifted = z;
    lifted.push_back(Int(1));
    a.points.push_back(std::move(lifted));
  }
  return a;
}

SumsetScan sumset_scan(const std::vector<LatticePoint>& gens, int n_max, bool track_first) {
  if (n_max < 0) throw Error(Errc::invalid_argument, "negative sumset level");
  SumsetScan scan;
  scan.sizes.reserve(n_max + 1);
  scan.sizes.emplace_back(1);  // S_0 = {0}
  if (gens.empty()) throw Error(Errc::empty_input, "sumset scan needs at least one generator");
  const int dim = static_cast<int>(gens.front().size());

  auto sorted_gens = gens;
  std::sort(sorted_gens.begin(), sorted_gens.end());
  sorted_gens.erase(std::unique(sorted_gens.begin(), sorted_gens.end()), sorted_gens.end());

  auto flat_gens = flatten(sorted_gens, dim);
  if (flat_gens && certify_sums(*flat_gens, n_max)) {
    FlatPoints cur;
    cur.dim = dim;
    cur.data.assign(dim, 0);
    FlatPoints prev;
    std::vector<std::pair<std::vector<std::int64_t>, int>> first;
    if (track_first) first.emplace_back(std::vector<std::int64_t>(dim, 0), 0);
    for (int n = 1; n <= n_max; ++n) {
      FlatPoints next = sumset_step(cur, *flat_gens);
      if (track_first) {
        // New points this level; requires the nested (0 in gens) regime.
        size_t i = 0, j = 0;
        while (i < next.size()) {
          int c = j < cur.size() ? cmp_rows(next.row(i), cur.row(j), dim) : -1;
          if (c == 0) {
            ++i;
            ++j;
          } else if (c < 0) {
            first.emplace_back(std::vector<std::int64_t>(next.row(i), next.row(i) + dim), n);
            ++i;
          } else {
            throw Error(Errc::internal, "sumset levels not nested; zero vector missing");
          }
        }
      }
      cur = std::move(next);
      scan.sizes.emplace_back(static_cast<unsigned long>(cur.size()));
    }
    if (track_first) {
      std::sort(first.begin(), first.end());
      scan.first.reserve(first.size());
      for (auto& [row, lvl] : first) {
        LatticePoint p(dim);
        for (int j = 0; j < dim; ++j) p[j] = Int(static_cast<long>(row[j]));
        scan.first.emplace_back(std::move(p), lvl);
      }
    }
    return scan;
  }

  // Reference path: plain mpz points, sort-unique sumsets.
  std::vector<LatticePoint> cur{LatticePoint(dim, Int(0))};
  std::vector<std::pair<LatticePoint, int>> first;
  if (track_first) first.emplace_back(cur.front(), 0);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<LatticePoint> next = sum_all_mpz(cur, sorted_gens);
    if (track_first) {
      for (const auto& p : next)
        if (!std::binary_search(cur.begin(), cur.end(), p)) first.emplace_back(p, n);
    }
    cur = std::move(next);
    scan.sizes.emplace_back(static_cast<unsigned long>(cur.size()));
  }
  if (track_first) {
    std::sort(first.begin(), first.end());
    scan.first = std::move(first);
  }
  return scan;
}

std::vector<Int> hilbert_function(const Configuration& a, int n_max) {
  return sumset_scan(a.points, n_max, false).sizes;
}

HilbertData h_polynomial(const Configuration& a, int cap) {
  const int d = a.degree;
  if (cap < d + 3)
    throw Error(Errc::invalid_argument,
                "h-polynomial window needs at least " + std::to_string(d + 3) + " levels");
  HilbertData data;
  data.cap = cap;
  data.values = hilbert_function(a, cap);

  std::vector<Int> h(cap + 1);
  for (int j = 0; j <= cap; ++j) {
    Int acc = 0;
    for (int k = 0; k <= d + 1 && k <= j; ++k) {
      Int term = binomial(d + 1, k) * data.values[j - k];
      if (k % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h[j] = acc;
  }

  data.stabilized = true;
  for (int j = cap - (d + 1); j <= cap; ++j)
    if (h[j] != 0) data.stabilized = false;

  std::vector<Rat> coeffs;
  coeffs.reserve(h.size());
  for (const Int& c : h) coeffs.emplace_back(c);
  data.h_poly = Polynomial(std::move(coeffs));
  return data;
}

HilbertData h_polynomial_auto(const Configuration& a, int initial_cap, int max_cap) {
  int cap = std::max(initial_cap, a.degree + 3);
  while (true) {
    HilbertData data = h_polynomial(a, cap);
    if (data.stabilized || cap >= max_cap) return data;
    cap = std::min(max_cap, cap * 2);
  }
}

namespace {

IdpResult idp_scan(const VPolytope& p, const Int& top) {
  IdpResult res;
  res.levels_checked = top;
  const auto& l1 = p.unit_lattice_points();
  for (Int n = 2; n <= top; ++n) {
    for (const auto& z : lattice_points(p, n)) {
      bool covered = false;
      for (const auto& g : l1) {
        LatticePoint rest(z.size());
        for (size_t j = 0; j < z.size(); ++j) rest[j] = z[j] - g[j];
        if (contains_in_dilate(p, rest, n - 1)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        res.idp = false;
        res.witness = DecompositionWitness{n, z, false, std::nullopt};
        return res;
      }
    }
  }
  return res;
}

}  // namespace

IdpResult idp_check(const VPolytope& p) {
  // Levels at and above degree-1 always decompose, so this range decides.
  Int top = std::max(1, p.affine_dim() - 1);
  return idp_scan(p, top);
}

IdpResult idp_check_exhaustive(const VPolytope& p, const Int& max_level) {
  if (max_level < 1) throw Error(Errc::invalid_argument, "exhaustive level bound must be >= 1");
  return idp_scan(p, max_level);
}

std::optional<std::vector<LatticePoint>> decompose_point(const VPolytope& p,
                                                         const LatticePoint& z, const Int& n) {
  if (n < 1) throw Error(Errc::invalid_argument, "decomposition level must be >= 1");
  if (!contains_in_dilate(p, z, n)) return std::nullopt;
  const auto& l1 = p.unit_lattice_points();
  if (n == 1) {
    if (std::binary_search(l1.begin(), l1.end(), z)) return std::vector<LatticePoint>{z};
    return std::nullopt;
  }
  for (const auto& g : l1) {
    LatticePoint rest(z.size());
    for (size_t j = 0; j < z.size(); ++j) rest[j] = z[j] - g[j];
    if (!contains_in_dilate(p, rest, n - 1)) continue;
    if (auto tail = decompose_point(p, rest, n - 1)) {
      tail->insert(tail->begin(), g);
      return tail;
    }
  }
  return std::nullopt;
}

}  // namespace freesumlab
