#ifndef FREESUMLAB_LINALG_HPP
#define FREESUMLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "freesumlab/numbers.hpp"

namespace freesumlab {

// Divides out the gcd of the entries, preserving signs.
// Throws Error(zero_vector) on the zero vector and Error(empty_input) on an
// empty one.
IntVector primitive_vector(const IntVector& v);

// Rank over Q of the row set, via fraction-free (Bareiss) elimination.
// An empty list has rank 0. Throws Error(dimension_mismatch) on ragged rows.
int rank(const std::vector<IntVector>& rows);

// Affine rank = dim of the affine hull + 1 (number of affinely independent
// points). Empty list has affine rank 0.
int affine_rank(const std::vector<IntVector>& points);

// Solves sum_i r_i * columns[i] = target exactly over Q.
// Pre: the columns are linearly independent (Error(not_independent) if not).
// Returns std::nullopt when target is outside the span.
std::optional<RatVector> solve_rational(const std::vector<IntVector>& columns,
                                        const IntVector& target);

// Whether the subgroup of Z^d generated by the points (integer combinations,
// not differences) is all of Z^d. Decided by Hermite normal form: the lattice
// is Z^d iff the HNF has d pivot rows, all with pivot 1.
bool spans_full_lattice(const std::vector<IntVector>& points, int d);

// Row-style Hermite normal form of the matrix whose rows generate the
// lattice. Returns the nonzero rows (pivots positive, entries above each
// pivot reduced to [0, pivot)).
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

// Primitive normal of the hyperplane through d affinely independent points
// in R^d, via cofactor expansion of the (d-1) x d difference matrix.
// The orientation is arbitrary; callers fix it against a reference point.
// Throws Error(not_independent) when the points do not span a hyperplane.
IntVector hyperplane_normal(const std::vector<IntVector>& points);

// Determinant of a square matrix, exact (Bareiss).
Int determinant(std::vector<IntVector> m);

}  // namespace freesumlab

#endif
