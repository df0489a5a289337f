#ifndef FREESUMLAB_DETAIL_ENGINE_HPP
#define FREESUMLAB_DETAIL_ENGINE_HPP

// Internal machinery shared by the enumeration, monoid and free-sum code.
// Nothing here is part of the public surface.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "freesumlab/numbers.hpp"
#include "freesumlab/polytope.hpp"

namespace freesumlab::detail {

inline constexpr int kMaxDim = 8;

// Flat fixed-width row storage for small-coordinate lattice points. Unused
// coordinates stay zero so rows compare with plain operator< on the array.
using Row = std::array<std::int64_t, kMaxDim>;

struct RowSet {
  int dim = 0;
  std::vector<Row> rows;  // lex-sorted, unique (callers maintain this)

  bool contains(const Row& r) const;
  void sort_unique();
};

Row to_row(const LatticePoint& p);                  // pre: coords fit int64, dim <= kMaxDim
LatticePoint to_point(const Row& r, int dim);
std::vector<LatticePoint> to_points(const RowSet& s);
std::optional<RowSet> to_rows(const std::vector<LatticePoint>& pts, int dim);

// Exact nonnegative fraction num/den, den > 0, reduced. Used for minimal
// dilation factors.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
Frac reduce(std::int64_t num, std::int64_t den);
// Cross-multiplied comparisons, exact in 128 bits (denominators <= 2^30,
// numerators <= 2^61 by construction).
bool frac_le(const Frac& a, const Frac& b);
bool frac_lt(const Frac& a, const Frac& b);
// a + b <= n, exact in 128 bits; callers keep n <= 2^30.
bool frac_sum_le(const Frac& a, const Frac& b, std::int64_t n);

// Facet system with int64 entries. Only built when every entry fits and the
// offsets stay small enough for certified fraction comparisons.
struct I64Facets {
  int dim = 0;
  std::vector<Row> normals;
  std::vector<std::int64_t> offsets;  // each in [0, 2^30]
  std::int64_t max_abs_normal = 0;
};
std::optional<I64Facets> to_i64_facets(const std::vector<Facet>& fs);

// Minimal t >= 0 with z in t*P for a full-dimensional P containing the
// origin, or nullopt when no dilate contains z.
std::optional<Rat> dilation_norm(const std::vector<Facet>& fs, const LatticePoint& z);

// int64 variant. certified=false means the arithmetic could not be bounded;
// fall back to the reference path. finite=false means no dilate contains z.
struct NormResult {
  bool certified = false;
  bool finite = false;
  Frac value{0, 1};
};
NormResult dilation_norm_i64(const I64Facets& fs, const Row& z);

// Box-scan enumeration of n*P (generic path). Throws Error(cap_exceeded)
// when the bounding box volume exceeds the enumeration cap.
std::vector<LatticePoint> enumerate_dilate_generic(const VPolytope& p, const Int& n);
Int count_dilate_generic(const VPolytope& p, const Int& n);

// Free-sum structural path: points of n*(P (+) Q) are the pairs (x, y) with
// norm_P(x) + norm_Q(y) <= n.
std::vector<LatticePoint> enumerate_dilate_freesum(const VPolytope& f, const Int& n);
Int count_dilate_freesum(const VPolytope& f, const Int& n);
bool freesum_contains(const VPolytope& f, const LatticePoint& z, const Int& n);

}  // namespace freesumlab::detail

#endif
