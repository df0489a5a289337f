#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/hilbert.hpp"
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

Polynomial poly(std::initializer_list<Rat> cs) { return Polynomial(std::vector<Rat>(cs)); }

}  // namespace

TEST_CASE("configuration lifts the unit lattice points to height one") {
  Configuration a = configuration(zoo::triangle213());
  CHECK(a.ambient == 3);
  CHECK(a.degree == 2);
  CHECK(a.points == pts({{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1}}));
}

TEST_CASE("sumset chains against the brute oracle") {
  auto gens = pts({{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}});
  auto scan = sumset_scan(gens, 5, false);
  CHECK(scan.sizes == oracle::sumset_sizes(gens, 5));

  // an asymmetric generator set, no zero, sizes only
  auto g2 = pts({{1, 0}, {0, 2}, {3, 3}});
  CHECK(sumset_scan(g2, 4, false).sizes == oracle::sumset_sizes(g2, 4));
}

TEST_CASE("first-appearance tracking") {
  auto scan = sumset_scan(pts({{0}, {2}, {3}}), 2, true);
  CHECK(scan.sizes == std::vector<Int>{1, 3, 6});
  std::vector<std::pair<LatticePoint, int>> want{
      {pt({0}), 0}, {pt({2}), 1}, {pt({3}), 1}, {pt({4}), 2}, {pt({5}), 2}, {pt({6}), 2}};
  CHECK(scan.first == want);

  // without the zero generator the chain does not nest
  CHECK(thrown_code([] { sumset_scan(pts({{2}, {3}}), 3, true); }) == Errc::internal);
  CHECK(thrown_code([] { sumset_scan({}, 1, false); }) == Errc::empty_input);
}

TEST_CASE("Hilbert function values") {
  auto sq = configuration(zoo::unit_square());
  auto h = hilbert_function(sq, 5);
  for (int n = 0; n <= 5; ++n) CHECK(h[n] == Int((n + 1) * (n + 1)));

  auto e = configuration(zoo::ex03());
  auto he = hilbert_function(e, 2);
  CHECK(he == std::vector<Int>{1, 5, 15});

  // H(n) never exceeds the lattice point count of the dilate
  auto tr = zoo::triangle213();
  auto ht = hilbert_function(configuration(tr), 6);
  auto counts = ehrhart_counts(tr, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(ht[n] <= counts[n]);
    CHECK(ht[n] == counts[n]);  // triangle213 is IDP, so the monoid saturates
  }
}

TEST_CASE("h polynomials of the standard bodies") {
  auto run = [](const VPolytope& p) {
    Configuration a = configuration(p);
    return h_polynomial(a, default_h_cap(a.degree));
  };
  auto hi = run(zoo::unit_interval());
  CHECK(hi.h_poly == poly({Rat(1)}));
  CHECK(hi.stabilized);
  CHECK(hi.cap == default_h_cap(1));
  CHECK(hi.values.size() == static_cast<size_t>(hi.cap) + 1);

  CHECK(run(zoo::unit_square()).h_poly == poly({Rat(1), Rat(1)}));
  CHECK(run(zoo::unit_cube(3)).h_poly == poly({Rat(1), Rat(4), Rat(1)}));
  CHECK(run(zoo::unit_simplex(3)).h_poly == poly({Rat(1)}));
  CHECK(run(zoo::ex03()).h_poly == poly({Rat(1), Rat(1), Rat(1)}));
  CHECK(run(zoo::triangle213()).h_poly == poly({Rat(1), Rat(1), Rat(1)}));

  CHECK(thrown_code([] { h_polynomial(configuration(zoo::unit_square()), 4); }) ==
        Errc::invalid_argument);  // cap below degree+3
}

TEST_CASE("h equals delta exactly for the IDP bodies (and not for the free sum)") {
  for (const VPolytope& p : {zoo::unit_square(), zoo::unit_cube(3), zoo::unit_simplex(4),
                             zoo::ex03(), zoo::triangle213()}) {
    Configuration a = configuration(p);
    CAPTURE(p.name());
    CHECK(h_polynomial(a, default_h_cap(a.degree)).h_poly == delta_polynomial(p));
  }

  VPolytope f = free_sum(zoo::ex03(), zoo::ex03());
  auto hf = h_polynomial(configuration(f), 12);
  REQUIRE(hf.stabilized);
  // multiplicative (condition (1) holds), hence differs from delta
  CHECK(hf.h_poly == poly({Rat(1), Rat(2), Rat(3), Rat(2), Rat(1)}));
  CHECK(hf.h_poly != delta_polynomial(f));
}

TEST_CASE("IDP verdicts") {
  auto r = idp_check(zoo::ex03());
  CHECK(r.idp);
  CHECK(r.levels_checked == 2);
  CHECK_FALSE(r.witness.has_value());

  // dimension <= 2 needs no levels at all
  auto r2 = idp_check(zoo::triangle213());
  CHECK(r2.idp);
  CHECK(r2.levels_checked == 1);

  CHECK(idp_check(zoo::unit_cube(3)).idp);
  CHECK(idp_check(zoo::unit_simplex(4)).idp);
  CHECK(idp_check_exhaustive(zoo::ex03(), 6).idp);
}

TEST_CASE("the free sum fails IDP with the frozen witness") {
  VPolytope f = free_sum(zoo::ex03(), zoo::ex03());
  auto r = idp_check(f);
  CHECK_FALSE(r.idp);
  CHECK(r.levels_checked == 5);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->level == 3);
  CHECK(r.witness->point == pt({1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(r.witness->decomposable);
  CHECK_FALSE(r.witness->parts.has_value());

  // level 2 alone is clean; the failure really starts at 3
  CHECK(idp_check_exhaustive(f, 2).idp);
  auto x = idp_check_exhaustive(f, 3);
  CHECK_FALSE(x.idp);
  CHECK(x.witness->level == 3);
  CHECK(x.witness->point == r.witness->point);

  // the witness is genuinely non-decomposable
  CHECK_FALSE(decompose_point(f, r.witness->point, 3).has_value());
}

TEST_CASE("decompose_point reconstructs sums") {
  auto p = zoo::ex03();
  auto dec = decompose_point(p, pt({2, 1, 1}), 2);
  REQUIRE(dec.has_value());
  CHECK(*dec == pts({{1, 0, 1}, {1, 1, 0}}));

  // every level-2 point of an IDP polytope decomposes, and the parts add up
  for (const auto& z : lattice_points(p, 2)) {
    auto d = decompose_point(p, z, 2);
    CAPTURE(point_str(z));
    REQUIRE(d.has_value());
    CHECK(d->size() == 2);
    LatticePoint sum(3, Int(0));
    for (const auto& g : *d) {
      CHECK(std::binary_search(p.unit_lattice_points().begin(), p.unit_lattice_points().end(),
                               g));
      for (int j = 0; j < 3; ++j) sum[j] += g[j];
    }
    CHECK(sum == z);
  }

  // a point outside the dilate has no decomposition
  CHECK_FALSE(decompose_point(p, pt({3, 3, 3}), 2).has_value());
  CHECK(thrown_code([&] { decompose_point(p, pt({1, 0, 0}), 0); }) == Errc::invalid_argument);
}

TEST_CASE("structural embedded IDP check agrees with the generic scan") {
  // the embedded check applies when condition (1) holds for the pair
  struct Case {
    VPolytope p, q;
  };
  std::vector<Case> cases{
      {zoo::ex03(), zoo::ex03()},
      {zoo::ex12b_left(), zoo::segment02()},
      {zoo::unit_square(), zoo::unit_interval()},
      {zoo::triangle213(), zoo::triangle213()},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p.name());
    CAPTURE(c.q.name());
    if (!condition1(c.p, c.q, Condition1Method::both)) continue;
    VPolytope f = free_sum(c.p, c.q);
    auto fast = idp_check_freesum_embedded(f);
    auto slow = idp_check(f);
    CHECK(fast.idp == slow.idp);
    CHECK(fast.witness.has_value() == slow.witness.has_value());
    if (fast.witness) {
      CHECK(fast.witness->level == slow.witness->level);
      CHECK(fast.witness->point == slow.witness->point);
    }
  }
}
