#include "freesumlab/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>

#include "freesumlab/detail/engine.hpp"
#include "freesumlab/detail/hull.hpp"
#include "freesumlab/detail/polytope_impl.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/linalg.hpp"
#include "freesumlab/lp.hpp"

namespace freesumlab {

namespace {

struct Caps {
  std::atomic<long long> enum_cap{0};
  std::atomic<int> dim_cap{8};
  std::atomic<int> vert_cap{64};
  std::once_flag env_once;
};

Caps& caps() {
  static Caps c;
  return c;
}

}  // namespace

long long enumeration_cap() {
  Caps& c = caps();
  std::call_once(c.env_once, [&c] {
    long long v = 1'000'000;
    if (const char* e = std::getenv("FREESUMLAB_MAX_POINTS")) {
      std::string s(e);
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 15)
        throw Error(Errc::invalid_argument,
                    "FREESUMLAB_MAX_POINTS must be a positive integer, got '" + s + "'");
      v = std::stoll(s);
      if (v <= 0)
        throw Error(Errc::invalid_argument, "FREESUMLAB_MAX_POINTS must be positive");
    }
    c.enum_cap.store(v);
  });
  return c.enum_cap.load();
}

void set_enumeration_cap(long long v) {
  if (v <= 0) throw Error(Errc::invalid_argument, "enumeration cap must be positive");
  enumeration_cap();  // settle the env default first
  caps().enum_cap.store(v);
}

int dimension_cap() { return caps().dim_cap.load(); }
void set_dimension_cap(int v) {
  if (v <= 0) throw Error(Errc::invalid_argument, "dimension cap must be positive");
  caps().dim_cap.store(v);
}

int vertex_cap() { return caps().vert_cap.load(); }
void set_vertex_cap(int v) {
  if (v <= 0) throw Error(Errc::invalid_argument, "vertex cap must be positive");
  caps().vert_cap.store(v);
}

int VPolytope::ambient_dim() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  return impl_->ambient;
}

int VPolytope::affine_dim() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  return impl_->affine;
}

const std::string& VPolytope::name() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  return impl_->name;
}

const std::vector<LatticePoint>& VPolytope::generators() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  return impl_->generators;
}

const std::vector<LatticePoint>& VPolytope::vertices() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  return impl_->verts;
}

const std::vector<Facet>& VPolytope::facets() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  const Impl& im = *impl_;
  std::call_once(im.facets_once, [&im] {
    if (im.affine != im.ambient)
      throw Error(Errc::not_full_dimensional,
                  "facet enumeration needs a full-dimensional polytope (affine dimension " +
                      std::to_string(im.affine) + " < ambient " + std::to_string(im.ambient) +
                      ")");
    im.facets_cache = detail::incremental_hull(im.verts, im.ambient);
  });
  return im.facets_cache;
}

bool VPolytope::contains(const LatticePoint& z, const Int& n) const {
  if (z.size() != static_cast<size_t>(ambient_dim()))
    throw Error(Errc::dimension_mismatch, "membership query point has wrong length");
  if (n < 0) throw Error(Errc::invalid_argument, "negative dilation");
  if (is_free_sum() && factor_left().full_dimensional() && factor_right().full_dimensional())
    return detail::freesum_contains(*this, z, n);
  for (const Facet& f : facets())
    if (dot(f.normal, z) > n * f.offset) return false;
  return true;
}

bool VPolytope::contains_origin() const {
  LatticePoint zero(ambient_dim(), Int(0));
  return in_convex_hull(zero, vertices());
}

const std::vector<LatticePoint>& VPolytope::unit_lattice_points() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  const Impl& im = *impl_;
  std::call_once(im.l1_once, [this, &im] { im.l1_cache = lattice_points(*this, 1); });
  return im.l1_cache;
}

bool VPolytope::is_free_sum() const {
  if (!impl_) throw Error(Errc::invalid_argument, "use of an empty polytope value");
  return impl_->freesum;
}

const VPolytope& VPolytope::factor_left() const {
  if (!is_free_sum()) throw Error(Errc::invalid_argument, "polytope is not a free sum");
  return impl_->left;
}

const VPolytope& VPolytope::factor_right() const {
  if (!is_free_sum()) throw Error(Errc::invalid_argument, "polytope is not a free sum");
  return impl_->right;
}

VPolytope make_polytope(std::vector<LatticePoint> points, std::string name) {
  if (points.empty()) throw Error(Errc::empty_input, "a polytope needs at least one point");
  const size_t d = points.front().size();
  if (d == 0) throw Error(Errc::invalid_argument, "points need at least one coordinate");
  for (const auto& p : points)
    if (p.size() != d) throw Error(Errc::dimension_mismatch, "points of different lengths");
  if (d > static_cast<size_t>(dimension_cap()))
    throw Error(Errc::cap_exceeded, "ambient dimension " + std::to_string(d) +
                                        " exceeds the cap of " + std::to_string(dimension_cap()));

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  auto impl = std::make_shared<VPolytope::Impl>();
  impl->name = std::move(name);
  impl->ambient = static_cast<int>(d);
  impl->generators = std::move(points);
  impl->affine = affine_rank(impl->generators) - 1;

  // Minimal vertex set: drop every generator inside the hull of the others.
  const auto& gens = impl->generators;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<LatticePoint> others;
    others.reserve(gens.size() - 1);
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!in_convex_hull(gens[i], others)) impl->verts.push_back(gens[i]);
  }

  VPolytope p;
  p.impl_ = std::move(impl);
  return p;
}

const std::vector<Facet>& hull_facets(const VPolytope& p) { return p.facets(); }

bool contains_in_dilate(const VPolytope& p, const LatticePoint& z, const Int& n) {
  return p.contains(z, n);
}

std::vector<LatticePoint> lattice_points(const VPolytope& p, const Int& n) {
  if (n < 1) throw Error(Errc::invalid_argument, "lattice_points needs a dilation n >= 1");
  if (p.is_free_sum() && p.factor_left().full_dimensional() &&
      p.factor_right().full_dimensional())
    return detail::enumerate_dilate_freesum(p, n);
  return detail::enumerate_dilate_generic(p, n);
}

Int count_lattice_points(const VPolytope& p, const Int& n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative dilation");
  if (n == 0) return 1;
  if (p.is_free_sum() && p.factor_left().full_dimensional() &&
      p.factor_right().full_dimensional())
    return detail::count_dilate_freesum(p, n);
  return detail::count_dilate_generic(p, n);
}

bool facet_b_condition(const VPolytope& p) {
  const auto& fs = p.facets();
  for (const Facet& f : fs)
    if (f.offset < 0)
      throw Error(Errc::origin_missing,
                  "facet offsets are only meaningful with the origin inside; facet " +
                      point_str(f.normal) + " has offset " + to_string(f.offset));
  for (const Facet& f : fs)
    if (f.offset != 0 && f.offset != 1) return false;
  return true;
}

}  // namespace freesumlab
