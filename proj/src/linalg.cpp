#include "freesumlab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "freesumlab/error.hpp"

namespace freesumlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_vector: return "ZeroVector";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_independent: return "NotIndependent";
    case Errc::empty_input: return "EmptyInput";
    case Errc::not_full_dimensional: return "NotFullDimensional";
    case Errc::origin_missing: return "OriginMissing";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::interpolation_mismatch: return "InterpolationMismatch";
    case Errc::delta_tail_nonzero: return "DeltaTailNonzero";
    case Errc::methods_disagree: return "MethodsDisagree";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw Error(Errc::dimension_mismatch, "dot product of vectors with different lengths");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

std::string point_str(const LatticePoint& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw Error(Errc::invalid_argument, "empty integer literal");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(Errc::invalid_argument, "bare sign is not an integer");
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(Errc::invalid_argument, "bad integer literal '" + s + "'");
  return Int(s, 10);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator in '" + s + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool fits_i64(const Int& x) { return x.fits_slong_p(); }

std::int64_t to_i64(const Int& x) {
  assert(fits_i64(x));
  return x.get_si();
}

IntVector primitive_vector(const IntVector& v) {
  if (v.empty()) throw Error(Errc::empty_input, "primitive_vector of an empty vector");
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw Error(Errc::zero_vector, "primitive_vector of the zero vector");
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

namespace {

void check_rect(const std::vector<IntVector>& rows) {
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw Error(Errc::dimension_mismatch, "matrix rows of different lengths");
}

// In-place fraction-free elimination. Returns the rank; on exit m is upper
// trapezoidal up to row permutation already applied.
int bareiss_rank(std::vector<IntVector>& m) {
  if (m.empty()) return 0;
  const size_t nrows = m.size(), ncols = m.front().size();
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < nrows; ++i) {
      for (size_t j = c + 1; j < ncols; ++j) {
        Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  check_rect(rows);
  auto m = rows;
  return bareiss_rank(m);
}

int affine_rank(const std::vector<IntVector>& points) {
  if (points.empty()) return 0;
  check_rect(points);
  std::vector<IntVector> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) {
    IntVector d(points[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return 1 + rank(diffs);
}

std::optional<RatVector> solve_rational(const std::vector<IntVector>& columns,
                                        const IntVector& target) {
  const size_t k = columns.size();
  const size_t n = target.size();
  for (const auto& c : columns)
    if (c.size() != n)
      throw Error(Errc::dimension_mismatch, "column length does not match target length");
  if (rank(columns) != static_cast<int>(k))
    throw Error(Errc::not_independent, "solve_rational requires independent columns");

  // Rational Gaussian elimination on the augmented n x (k+1) system.
  std::vector<RatVector> a(n, RatVector(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(columns[j][i]);
    a[i][k] = Rat(target[i]);
  }
  std::vector<size_t> pivot_row(k);
  size_t r = 0;
  for (size_t c = 0; c < k; ++c) {
    size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    assert(piv < n);  // guaranteed by the rank check above
    std::swap(a[piv], a[r]);
    Rat inv = a[r][c];
    for (size_t j = c; j <= k; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (size_t i = r; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;  // inconsistent: target outside the span
  RatVector out(k);
  for (size_t c = 0; c < k; ++c) out[c] = a[pivot_row[c]][k];
  return out;
}

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
  if (rows.empty()) return {};
  check_rect(rows);
  const size_t ncols = rows.front().size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    // Reduce column c below row r to a single nonzero pivot by gcd steps.
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || cmp(abs(rows[i][c]), abs(rows[best][c])) < 0) best = i;
      }
      if (best == rows.size()) break;  // column is zero below r
      std::swap(rows[best], rows[r]);
      bool done = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];  // truncated division is fine here
        for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (size_t j = 0; j < ncols; ++j) rows[r][j] = -rows[r][j];
    // Reduce the entries above the pivot into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool spans_full_lattice(const std::vector<IntVector>& points, int d) {
  if (d <= 0) throw Error(Errc::invalid_argument, "ambient dimension must be positive");
  for (const auto& p : points)
    if (p.size() != static_cast<size_t>(d))
      throw Error(Errc::dimension_mismatch, "point length does not match ambient dimension");
  auto hnf = hermite_normal_form(points);
  if (hnf.size() != static_cast<size_t>(d)) return false;
  for (int i = 0; i < d; ++i)
    if (hnf[i][i] != 1) return false;
  return true;
}

Int determinant(std::vector<IntVector> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  check_rect(m);
  if (m.front().size() != n) throw Error(Errc::dimension_mismatch, "determinant of non-square matrix");
  Int prev = 1;
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < n; ++i) {
      for (size_t j = c + 1; j < n; ++j) {
        Int t = m[c][c] * m[i][j] - m[i][c] * m[c][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntVector hyperplane_normal(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(Errc::empty_input, "hyperplane through no points");
  check_rect(points);
  const size_t d = points.front().size();
  if (points.size() != d)
    throw Error(Errc::invalid_argument, "a hyperplane in R^d needs exactly d points");
  // Rows of the difference matrix; normal entries are signed maximal minors.
  std::vector<IntVector> diffs;
  for (size_t i = 1; i < d; ++i) {
    IntVector r(d);
    for (size_t j = 0; j < d; ++j) r[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(r));
  }
  IntVector normal(d);
  bool nonzero = false;
  int sign = 1;
  for (size_t j = 0; j < d; ++j) {
    std::vector<IntVector> minor;
    minor.reserve(d - 1);
    for (const auto& r : diffs) {
      IntVector row;
      row.reserve(d - 1);
      for (size_t c = 0; c < d; ++c)
        if (c != j) row.push_back(r[c]);
      minor.push_back(std::move(row));
    }
    normal[j] = sign > 0 ? determinant(minor) : -determinant(std::move(minor));
    if (normal[j] != 0) nonzero = true;
    sign = -sign;
  }
  if (!nonzero)
    throw Error(Errc::not_independent, "points do not span a hyperplane");
  return primitive_vector(normal);
}

}  // namespace freesumlab
