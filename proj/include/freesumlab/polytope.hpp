#ifndef FREESUMLAB_POLYTOPE_HPP
#define FREESUMLAB_POLYTOPE_HPP

#include <memory>
#include <string>
#include <vector>

#include "freesumlab/numbers.hpp"

namespace freesumlab {

// Closed half-space normal . x <= offset with primitive integer normal.
struct Facet {
  IntVector normal;
  Int offset;

  bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

// Resource guards. Mutators are meant for process startup (CLI flag / env
// parsing); the library reads them concurrently without locking.
long long enumeration_cap();            // max box volume / point-set size, default 10^6
void set_enumeration_cap(long long);    // also settable via FREESUMLAB_MAX_POINTS
int dimension_cap();                    // default 8
void set_dimension_cap(int);
int vertex_cap();                       // default 64, enforced by the hull
void set_vertex_cap(int);

// Lattice polytope given by generating points. Immutable after construction;
// facets and the unit lattice-point set are computed once on first use and
// then frozen, so values can be shared freely across threads.
class VPolytope {
 public:
  VPolytope() = default;

  int ambient_dim() const;
  int affine_dim() const;
  bool full_dimensional() const { return ambient_dim() == affine_dim(); }

  const std::string& name() const;

  // Deduplicated input points, lex-sorted.
  const std::vector<LatticePoint>& generators() const;
  // Minimal vertex set (every generator is in the hull of these), lex-sorted.
  const std::vector<LatticePoint>& vertices() const;
  // Complete irredundant facet list, lex-sorted by (normal, offset).
  // Throws Error(not_full_dimensional) when affine_dim < ambient_dim.
  const std::vector<Facet>& facets() const;

  // Membership of z in the dilate n*P, n >= 0 (n = 0 tests z = 0 for a
  // polytope containing only the origin after scaling).
  bool contains(const LatticePoint& z, const Int& n) const;
  // Origin membership, decided by LP so it also works for degenerate
  // polytopes.
  bool contains_origin() const;

  // Cached lattice_points(P, 1).
  const std::vector<LatticePoint>& unit_lattice_points() const;

  // Free sums remember their factors; dilate enumeration and membership then
  // run on the factors' facet systems instead of a box scan in the sum's
  // ambient space.
  bool is_free_sum() const;
  const VPolytope& factor_left() const;
  const VPolytope& factor_right() const;

  bool valid() const { return impl_ != nullptr; }

 private:
  friend VPolytope make_polytope(std::vector<LatticePoint>, std::string);
  friend VPolytope free_sum(const VPolytope&, const VPolytope&);
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Builds a polytope from generating points: validates shape, deduplicates,
// computes affine dimension and the minimal vertex set (exact LP).
// Throws Error(empty_input), Error(dimension_mismatch), Error(cap_exceeded).
VPolytope make_polytope(std::vector<LatticePoint> points, std::string name = "");

const std::vector<Facet>& hull_facets(const VPolytope& p);

bool contains_in_dilate(const VPolytope& p, const LatticePoint& z, const Int& n);

// Lattice points of n*P (n >= 1) in lex order.
std::vector<LatticePoint> lattice_points(const VPolytope& p, const Int& n);

// |n*P intersect Z^d| without materializing the set (n >= 0).
Int count_lattice_points(const VPolytope& p, const Int& n);

// Whether every facet offset is 0 or 1. Requires the origin in P
// (Error(origin_missing) otherwise, since the offset normalization is
// anchored at 0).
bool facet_b_condition(const VPolytope& p);

}  // namespace freesumlab

#endif
