#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "freesumlab/error.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/polytope.hpp"
#include "freesumlab/zoo.hpp"
#include "oracles.hpp"

using namespace freesumlab;
using oracle::pt;
using oracle::pts;

namespace {

template <class F>
Errc thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::internal;
}

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// random point set in [-3, 3]^dim; redrawn until full-dimensional
std::vector<LatticePoint> random_full_dim(std::uint64_t& s, int dim, int count) {
  for (;;) {
    std::vector<LatticePoint> ps;
    for (int i = 0; i < count; ++i) {
      LatticePoint p(dim);
      for (int j = 0; j < dim; ++j) p[j] = static_cast<long>(splitmix(s) % 7) - 3;
      ps.push_back(std::move(p));
    }
    if (affine_rank(ps) == dim + 1) return ps;
  }
}

}  // namespace

TEST_CASE("five-vertex example: vertices, facets, lattice points") {
  VPolytope p = zoo::ex03();
  CHECK(p.ambient_dim() == 3);
  CHECK(p.affine_dim() == 3);
  CHECK(p.name() == "ex03");
  CHECK(p.vertices() ==
        pts({{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(p.generators() == p.vertices());

  std::vector<Facet> want{
      {pt({-1, -1, 1}), Int(0)}, {pt({-1, 1, -1}), Int(0)}, {pt({0, -1, 0}), Int(0)},
      {pt({0, 0, -1}), Int(0)},  {pt({1, 0, 0}), Int(1)},   {pt({1, 1, 1}), Int(2)},
  };
  CHECK(p.facets() == want);

  // a (0,1)-polytope: its unit lattice points are exactly the vertices
  CHECK(p.unit_lattice_points() == p.vertices());
  CHECK(p.contains_origin());
  CHECK_FALSE(facet_b_condition(p));
  CHECK_FALSE(contains_in_dilate(p, pt({1, 1, 1}), 1));
  CHECK(contains_in_dilate(p, pt({1, 1, 1}), 2));
}

TEST_CASE("unit square and triangle facets, frozen") {
  VPolytope sq = zoo::unit_square();
  std::vector<Facet> sq_want{
      {pt({-1, 0}), Int(0)}, {pt({0, -1}), Int(0)}, {pt({0, 1}), Int(1)}, {pt({1, 0}), Int(1)}};
  CHECK(sq.facets() == sq_want);
  CHECK(facet_b_condition(sq));
  CHECK(sq.unit_lattice_points() == pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));

  VPolytope tr = zoo::triangle213();
  std::vector<Facet> tr_want{
      {pt({-2, 1}), Int(0)}, {pt({1, -2}), Int(0)}, {pt({1, 1}), Int(3)}};
  CHECK(tr.facets() == tr_want);
  CHECK_FALSE(facet_b_condition(tr));  // offset 3
  CHECK(tr.unit_lattice_points() == pts({{0, 0}, {1, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("make_polytope dedupes and splits generators from vertices") {
  auto p = make_polytope(pts({{2, 2}, {0, 0}, {2, 0}, {0, 2}, {1, 1}, {0, 0}}), "sq2");
  CHECK(p.generators() == pts({{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 2}}));
  CHECK(p.vertices() == pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  CHECK(p.name() == "sq2");
}

TEST_CASE("construction and facet errors") {
  CHECK(thrown_code([] { make_polytope({}, ""); }) == Errc::empty_input);
  CHECK(thrown_code([] { make_polytope(pts({{1, 0}, {1}}), ""); }) == Errc::dimension_mismatch);
  CHECK(thrown_code([] {
          make_polytope({LatticePoint(9, Int(0))}, "");
        }) == Errc::cap_exceeded);

  // a segment in the plane has no facet system
  auto seg = make_polytope(pts({{0, 0}, {2, 2}}), "");
  CHECK(seg.affine_dim() == 1);
  CHECK(thrown_code([&] { seg.facets(); }) == Errc::not_full_dimensional);

  // 65 points in convex position trip the hull cap
  std::vector<LatticePoint> parabola;
  for (long i = 0; i <= 64; ++i) parabola.push_back(pt({i, i * i}));
  auto big = make_polytope(parabola, "");
  CHECK(thrown_code([&] { big.facets(); }) == Errc::cap_exceeded);

  CHECK_FALSE(VPolytope{}.valid());
}

TEST_CASE("membership against the lifted-cone oracle") {
  auto gens = pts({{-2, -1}, {1, 0}, {0, 1}, {1, 1}});
  auto p = make_polytope(gens, "");
  for (long n : {0L, 1L, 2L, 3L}) {
    for (long x = -7; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y) {
        CAPTURE(n);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(contains_in_dilate(p, pt({x, y}), Int(n)) == oracle::contains(gens, pt({x, y}), n));
      }
  }
}

TEST_CASE("dilate enumeration matches the oracle and the count") {
  auto gens = pts({{0, 0}, {2, 1}, {1, 2}});
  auto p = make_polytope(gens, "");
  for (long n = 1; n <= 4; ++n) {
    auto mine = lattice_points(p, Int(n));
    CHECK(mine == oracle::lattice_points(gens, n));
    CHECK(count_lattice_points(p, Int(n)) == Int(static_cast<long>(mine.size())));
  }
  CHECK(count_lattice_points(p, 0) == 1);
  CHECK(lattice_points(p, 1) == p.unit_lattice_points());
}

TEST_CASE("hull and enumeration agree with oracles on a random corpus") {
  std::uint64_t seed = 0xfeedface;
  for (int dim = 2; dim <= 3; ++dim) {
    for (int iter = 0; iter < 25; ++iter) {
      auto gens = random_full_dim(seed, dim, dim + 3);
      CAPTURE(dim);
      CAPTURE(iter);
      auto p = make_polytope(gens, "");
      CHECK(p.vertices() == oracle::vertices(gens));

      // every generator satisfies every facet; facets are supporting
      for (const Facet& f : p.facets()) {
        int tight = 0;
        for (const auto& g : p.generators()) {
          Int v = dot(f.normal, g);
          CHECK(v <= f.offset);
          if (v == f.offset) ++tight;
        }
        CHECK(tight >= dim);  // holds a (d-1)-face
      }

      CHECK(lattice_points(p, 1) == oracle::lattice_points(gens, 1));
      CHECK(lattice_points(p, 2) == oracle::lattice_points(gens, 2));
    }
  }
}

TEST_CASE("rebuilding from the vertex set is the identity") {
  std::uint64_t seed = 0xabcdef12;
  for (int iter = 0; iter < 10; ++iter) {
    auto gens = random_full_dim(seed, 3, 6);
    auto p = make_polytope(gens, "");
    auto q = make_polytope(p.vertices(), "");
    CHECK(p.vertices() == q.vertices());
    CHECK(p.facets() == q.facets());
  }
}

TEST_CASE("free sums carry their factors and match the structure-blind build") {
  VPolytope f = free_sum(zoo::ex03(), zoo::triangle213());
  CHECK(f.is_free_sum());
  CHECK(f.ambient_dim() == 5);
  CHECK(f.affine_dim() == 5);
  CHECK(f.factor_left().name() == "ex03");
  CHECK(f.factor_right().name() == "triangle213");
  CHECK(f.name() == "ex03 (+) triangle213");

  VPolytope blind = make_polytope(f.generators(), "");
  CHECK_FALSE(blind.is_free_sum());
  CHECK(f.vertices() == blind.vertices());
  CHECK(f.facets() == blind.facets());
  for (long n = 0; n <= 3; ++n)
    CHECK(count_lattice_points(f, Int(n)) == count_lattice_points(blind, Int(n)));
  CHECK(lattice_points(f, 2) == lattice_points(blind, 2));

  // membership agrees too, including outside points
  std::uint64_t seed = 77;
  for (int iter = 0; iter < 200; ++iter) {
    LatticePoint z(5);
    for (int j = 0; j < 5; ++j) z[j] = static_cast<long>(splitmix(seed) % 9) - 2;
    Int n(static_cast<long>(splitmix(seed) % 4));
    CHECK(f.contains(z, n) == blind.contains(z, n));
  }
}

TEST_CASE("free sum point counts are symmetric in the factors") {
  VPolytope a = zoo::triangle213();
  VPolytope b = zoo::unit_square();
  VPolytope ab = free_sum(a, b);
  VPolytope ba = free_sum(b, a);
  for (long n = 0; n <= 4; ++n)
    CHECK(count_lattice_points(ab, Int(n)) == count_lattice_points(ba, Int(n)));
}

TEST_CASE("free sum preconditions") {
  auto shifted = make_polytope(pts({{1}, {2}}), "shifted");
  CHECK(thrown_code([&] { free_sum(shifted, zoo::unit_interval()); }) == Errc::origin_missing);
  CHECK(thrown_code([&] { free_sum(zoo::unit_interval(), shifted); }) == Errc::origin_missing);
  CHECK(thrown_code([] { free_sum(VPolytope{}, VPolytope{}); }) == Errc::invalid_argument);
}

TEST_CASE("degenerate membership questions still answer") {
  auto seg = make_polytope(pts({{0, 0}, {2, 2}}), "");
  CHECK(seg.contains_origin());
  auto off = make_polytope(pts({{1, 1}, {2, 2}}), "");
  CHECK_FALSE(off.contains_origin());
}
