#ifndef FREESUMLAB_DETAIL_HULL_HPP
#define FREESUMLAB_DETAIL_HULL_HPP

#include <vector>

#include "freesumlab/polytope.hpp"

namespace freesumlab::detail {

// Exact incremental (beneath-beyond) facet enumeration for a full-dimensional
// point set in R^d. Points need not be in convex position. The result is the
// complete irredundant facet list, lex-sorted by (normal, offset).
// Pre: affine rank of the points is d + 1; caller enforces caps.
std::vector<Facet> incremental_hull(const std::vector<LatticePoint>& points, int dim);

}  // namespace freesumlab::detail

#endif
