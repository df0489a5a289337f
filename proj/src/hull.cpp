#include "freesumlab/detail/hull.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "freesumlab/error.hpp"
#include "freesumlab/linalg.hpp"

namespace freesumlab::detail {

namespace {

// Incidences are bitmasks over point indices; vertex_cap() keeps the count
// at or below 64.
using Mask = std::uint64_t;

struct HullFacet {
  IntVector normal;  // primitive, hull on the <= side
  Int offset;
  Mask incident = 0;  // processed points lying on the hyperplane
};

struct FacetKey {
  IntVector normal;
  Int offset;
  bool operator<(const FacetKey& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

// Greedily picks `want` affinely independent points from the masked set,
// lowest indices first. nullopt when the mask spans fewer.
std::optional<std::vector<size_t>> affine_basis_of_mask(const std::vector<LatticePoint>& pts,
                                                        Mask m, size_t want) {
  std::vector<size_t> chosen;
  std::vector<IntVector> sel;
  for (size_t i = 0; i < pts.size() && chosen.size() < want; ++i) {
    if (!(m & (Mask{1} << i))) continue;
    sel.push_back(pts[i]);
    if (affine_rank(sel) == static_cast<int>(sel.size())) {
      chosen.push_back(i);
    } else {
      sel.pop_back();
    }
  }
  if (chosen.size() < want) return std::nullopt;
  return chosen;
}

}  // namespace

std::vector<Facet> incremental_hull(const std::vector<LatticePoint>& points, int dim) {
  const size_t n = points.size();
  if (n == 0) throw Error(Errc::empty_input, "hull of no points");
  const size_t cap = std::min<size_t>(64, static_cast<size_t>(std::max(1, vertex_cap())));
  if (n > cap)
    throw Error(Errc::cap_exceeded,
                "hull limited to " + std::to_string(cap) + " points, got " + std::to_string(n));
  const size_t d = static_cast<size_t>(dim);

  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  auto seed = affine_basis_of_mask(points, all, d + 1);
  if (!seed) {
    std::vector<IntVector> sel(points.begin(), points.end());
    throw Error(Errc::not_full_dimensional,
                "hull needs a full-dimensional point set (affine dimension " +
                    std::to_string(affine_rank(sel) - 1) + " < " + std::to_string(dim) + ")");
  }

  std::vector<char> processed(n, 0);
  for (size_t s : *seed) processed[s] = 1;

  auto incidence_over_processed = [&](const IntVector& normal, const Int& offset) {
    Mask m = 0;
    for (size_t i = 0; i < n; ++i)
      if (processed[i] && dot(normal, points[i]) == offset) m |= Mask{1} << i;
    return m;
  };

  // Seed simplex facets: hyperplane through each d-subset, oriented against
  // the omitted seed point.
  std::vector<HullFacet> facets;
  for (size_t omit = 0; omit < seed->size(); ++omit) {
    std::vector<IntVector> plane_pts;
    for (size_t i = 0; i < seed->size(); ++i)
      if (i != omit) plane_pts.push_back(points[(*seed)[i]]);
    HullFacet f;
    f.normal = hyperplane_normal(plane_pts);
    f.offset = dot(f.normal, plane_pts.front());
    Int side = dot(f.normal, points[(*seed)[omit]]);
    if (side > f.offset) {
      for (Int& x : f.normal) x = -x;
      f.offset = -f.offset;
    } else if (side == f.offset) {
      throw Error(Errc::internal, "hull: degenerate seed simplex");
    }
    f.incident = incidence_over_processed(f.normal, f.offset);
    facets.push_back(std::move(f));
  }

  for (size_t p = 0; p < n; ++p) {
    if (processed[p]) continue;
    std::vector<char> visible(facets.size(), 0);
    bool any_visible = false;
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      if (dot(facets[fi].normal, points[p]) > facets[fi].offset) {
        visible[fi] = 1;
        any_visible = true;
      }
    }
    processed[p] = 1;
    if (!any_visible) {
      // Inside or on the boundary: only incidences can change.
      for (auto& f : facets)
        if (dot(f.normal, points[p]) == f.offset) f.incident |= Mask{1} << p;
      continue;
    }

    std::map<FacetKey, HullFacet> next;
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      if (visible[fi]) continue;
      HullFacet f = facets[fi];
      if (dot(f.normal, points[p]) == f.offset) f.incident |= Mask{1} << p;
      next.insert({FacetKey{f.normal, f.offset}, std::move(f)});
    }

    // Horizon ridges: (d-2)-faces shared by a visible and a non-visible
    // facet. Each spawns the hyperplane through the ridge and p. In d = 1
    // the ridge is empty and the new facet is p alone.
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      if (!visible[fi]) continue;
      for (size_t gi = 0; gi < facets.size(); ++gi) {
        if (visible[gi]) continue;
        Mask ridge = facets[fi].incident & facets[gi].incident;
        if (static_cast<size_t>(__builtin_popcountll(ridge)) + 1 < d) continue;
        auto base = affine_basis_of_mask(points, ridge, d - 1);
        if (!base) continue;  // shared face spans less than a ridge
        std::vector<IntVector> plane_pts;
        for (size_t b : *base) plane_pts.push_back(points[b]);
        plane_pts.push_back(points[p]);
        IntVector normal;
        try {
          normal = hyperplane_normal(plane_pts);
        } catch (const Error&) {
          continue;  // p lies in the ridge's affine hull
        }
        Int offset = dot(normal, points[p]);
        bool le_ok = true, ge_ok = true;
        for (size_t i = 0; i < n && (le_ok || ge_ok); ++i) {
          if (!processed[i]) continue;
          Int v = dot(normal, points[i]);
          if (v > offset) le_ok = false;
          if (v < offset) ge_ok = false;
        }
        if (!le_ok && !ge_ok) continue;  // cuts the current hull: not a facet
        if (!le_ok) {
          for (Int& x : normal) x = -x;
          offset = -offset;
        }
        HullFacet nf;
        nf.normal = std::move(normal);
        nf.offset = std::move(offset);
        nf.incident = incidence_over_processed(nf.normal, nf.offset);
        next.insert({FacetKey{nf.normal, nf.offset}, std::move(nf)});
      }
    }

    facets.clear();
    facets.reserve(next.size());
    for (auto& [key, f] : next) facets.push_back(std::move(f));
  }

  // Soundness and support validation; failures here mean the algorithm is
  // broken, not the input.
  std::vector<Facet> out;
  out.reserve(facets.size());
  for (auto& f : facets) {
    for (const auto& pt : points)
      if (dot(f.normal, pt) > f.offset)
        throw Error(Errc::internal, "hull: emitted half-space cuts off an input point");
    if (!affine_basis_of_mask(points, f.incident, d))
      throw Error(Errc::internal, "hull: emitted half-space is not facet-supported");
    out.push_back(Facet{std::move(f.normal), std::move(f.offset)});
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace freesumlab::detail
