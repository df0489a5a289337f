#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freesumlab/error.hpp"
#include "freesumlab/linalg.hpp"
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

}  // namespace

TEST_CASE("primitive_vector divides out the content and keeps signs") {
  CHECK(primitive_vector(pt({2, 4, 6})) == pt({1, 2, 3}));
  CHECK(primitive_vector(pt({-3, 6})) == pt({-1, 2}));
  CHECK(primitive_vector(pt({5})) == pt({1}));
  CHECK(primitive_vector(pt({-7})) == pt({-1}));
  CHECK(primitive_vector(pt({0, -4, 6})) == pt({0, -2, 3}));
  CHECK(thrown_code([] { primitive_vector(pt({0, 0})); }) == Errc::zero_vector);
  CHECK(thrown_code([] { primitive_vector({}); }) == Errc::empty_input);
}

TEST_CASE("rank over Q") {
  CHECK(rank({}) == 0);
  CHECK(rank(pts({{0, 0}})) == 0);
  CHECK(rank(pts({{2, 1}, {1, 2}})) == 2);
  CHECK(rank(pts({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(pts({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(pts({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}})) == 2);
  CHECK(thrown_code([] { rank(pts({{1, 0}, {1}})); }) == Errc::dimension_mismatch);
}

TEST_CASE("affine_rank counts affinely independent points") {
  CHECK(affine_rank({}) == 0);
  CHECK(affine_rank(pts({{3, 5}})) == 1);
  CHECK(affine_rank(pts({{0, 0}, {1, 0}, {2, 0}})) == 2);
  CHECK(affine_rank(pts({{0, 0}, {1, 0}, {0, 1}})) == 3);
  CHECK(affine_rank(pts({{1, 1}, {2, 2}, {3, 3}, {4, 5}})) == 3);
}

TEST_CASE("solve_rational solves against independent columns") {
  auto sol = solve_rational(pts({{2, 1}, {1, 2}}), pt({1, 1}));
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(1, 3));
  CHECK((*sol)[1] == Rat(1, 3));

  // outside the span
  CHECK_FALSE(solve_rational(pts({{1, 0, 0}}), pt({0, 1, 0})).has_value());
  // negative coefficients are fine, the solver only solves
  auto neg = solve_rational(pts({{1, 0}, {0, 1}}), pt({-2, 3}));
  REQUIRE(neg.has_value());
  CHECK((*neg)[0] == Rat(-2));
  CHECK((*neg)[1] == Rat(3));

  CHECK(thrown_code([] { solve_rational(pts({{1, 2}, {2, 4}}), pt({1, 1})); }) ==
        Errc::not_independent);
}

TEST_CASE("spans_full_lattice via Hermite form") {
  CHECK(spans_full_lattice(pts({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 0}}), 3));
  CHECK_FALSE(spans_full_lattice(pts({{2, 0}, {0, 1}}), 2));
  CHECK_FALSE(spans_full_lattice(pts({{1, 1}, {1, -1}}), 2));  // index-2 sublattice
  CHECK(spans_full_lattice(pts({{1, 1}, {1, 0}}), 2));
  CHECK(spans_full_lattice(pts({{2}, {3}}), 1));
  CHECK_FALSE(spans_full_lattice({}, 1));
  CHECK_FALSE(spans_full_lattice(pts({{1, 0}}), 2));
}

TEST_CASE("hermite_normal_form shape and lattice invariance") {
  CHECK(hermite_normal_form(pts({{2, 0}, {0, 2}})) == pts({{2, 0}, {0, 2}}));
  CHECK(hermite_normal_form(pts({{1, 1}, {1, -1}})) == pts({{1, 1}, {0, 2}}));
  CHECK(hermite_normal_form(pts({{3}, {5}})) == pts({{1}}));
  CHECK(hermite_normal_form(pts({{0, 0}})).empty());

  // same lattice in, same form out
  auto rows = pts({{4, 2, 7}, {1, 0, 3}, {0, 5, 1}});
  auto h = hermite_normal_form(rows);
  auto both = rows;
  both.insert(both.end(), h.begin(), h.end());
  CHECK(hermite_normal_form(both) == h);

  // pivots positive, entries above a pivot reduced into [0, pivot)
  for (size_t i = 0; i < h.size(); ++i) {
    size_t col = 0;
    while (col < h[i].size() && h[i][col] == 0) ++col;
    REQUIRE(col < h[i].size());
    CHECK(h[i][col] > 0);
    for (size_t k = 0; k < i; ++k) {
      CHECK(h[k][col] >= 0);
      CHECK(h[k][col] < h[i][col]);
    }
  }
}

TEST_CASE("hyperplane_normal is the primitive cofactor normal, up to sign") {
  auto n1 = hyperplane_normal(pts({{1, 0}, {0, 1}}));
  CHECK((n1 == pt({1, 1}) || n1 == pt({-1, -1})));

  auto n2 = hyperplane_normal(pts({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK((n2 == pt({1, -1, -1}) || n2 == pt({-1, 1, 1})));

  // primitive even when differences share a factor
  auto n3 = hyperplane_normal(pts({{0, 0}, {0, 4}}));
  CHECK((n3 == pt({1, 0}) || n3 == pt({-1, 0})));

  CHECK(thrown_code([] { hyperplane_normal(pts({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}})); }) ==
        Errc::not_independent);
}

TEST_CASE("determinant, exact") {
  CHECK(determinant(pts({{2, 1}, {1, 2}})) == 3);
  CHECK(determinant(pts({{1}})) == 1);
  CHECK(determinant(pts({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(pts({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(pts({{1, 0, 0, 0},
                         {0, 1, 0, 0},
                         {0, 0, 1, 0},
                         {0, 0, 0, 1}})) == 1);
  CHECK(determinant(pts({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}})) == -90);
}

TEST_CASE("numbers utilities") {
  CHECK(dot(pt({1, 2, 3}), pt({4, 5, 6})) == 32);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 4) == 1);
  CHECK(binomial(3, 5) == 0);

  CHECK(parse_int("-42") == -42);
  CHECK(parse_int("12345678901234567890123") == Int("12345678901234567890123"));
  CHECK(thrown_code([] { parse_int("7x"); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { parse_int(""); }) == Errc::invalid_argument);

  CHECK(parse_rat("2/3") == Rat(2, 3));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK(to_string(Rat(2, 3)) == "2/3");
  Rat half(4, 8);  // two-part construction needs an explicit canonicalize
  half.canonicalize();
  CHECK(to_string(half) == "1/2");
  CHECK(half == Rat(1, 2));

  CHECK(fits_i64(Int("9223372036854775807")));
  CHECK_FALSE(fits_i64(Int("9223372036854775808")));
  CHECK(fits_i64(Int("-9223372036854775808")));
  CHECK_FALSE(fits_i64(Int("-9223372036854775809")));
  CHECK(to_i64(Int("-9223372036854775808")) == INT64_MIN);
}

TEST_CASE("solve_rational agrees with hand eliminations on random small systems") {
  // 3x3 with known inverse: A = [[2,0,1],[1,1,0],[0,1,3]], det = 5
  auto cols = pts({{2, 1, 0}, {0, 1, 1}, {1, 0, 3}});  // columns of A
  auto s = solve_rational(cols, pt({3, 2, 4}));
  REQUIRE(s.has_value());
  // verify by substitution: sum_i s_i * col_i = target
  for (int r = 0; r < 3; ++r) {
    Rat acc = (*s)[0] * Rat(cols[0][r]) + (*s)[1] * Rat(cols[1][r]) + (*s)[2] * Rat(cols[2][r]);
    CHECK(acc == Rat(pt({3, 2, 4})[r]));
  }
}
