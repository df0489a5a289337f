#ifndef FREESUMLAB_LP_HPP
#define FREESUMLAB_LP_HPP

#include <vector>

#include "freesumlab/numbers.hpp"

namespace freesumlab {

// Whether x lies in the convex hull of the given points, decided exactly by
// phase-1 simplex (Bland's rule, rational pivots) on
//   sum_i l_i * p_i = x,  sum_i l_i = 1,  l >= 0.
// Works in any dimension, full-dimensional or not.
bool in_convex_hull(const IntVector& x, const std::vector<IntVector>& points);

// Same test for a rational query point.
bool in_convex_hull(const RatVector& x, const std::vector<IntVector>& points);

}  // namespace freesumlab

#endif
