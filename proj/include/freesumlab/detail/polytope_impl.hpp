#ifndef FREESUMLAB_DETAIL_POLYTOPE_IMPL_HPP
#define FREESUMLAB_DETAIL_POLYTOPE_IMPL_HPP

#include <mutex>
#include <string>
#include <vector>

#include "freesumlab/polytope.hpp"

namespace freesumlab {

// Shared state behind VPolytope values. Everything is fixed at construction
// except the caches, which are computed once under their flags.
struct VPolytope::Impl {
  std::string name;
  int ambient = 0;
  int affine = -1;
  std::vector<LatticePoint> generators;
  std::vector<LatticePoint> verts;

  bool freesum = false;
  VPolytope left, right;

  mutable std::once_flag facets_once;
  mutable std::vector<Facet> facets_cache;
  mutable std::once_flag l1_once;
  mutable std::vector<LatticePoint> l1_cache;
};

}  // namespace freesumlab

#endif
