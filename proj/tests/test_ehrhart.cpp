#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/zoo.hpp"
#include "oracles.hpp"

using namespace freesumlab;
using oracle::pt;
using oracle::pts;

namespace {

Polynomial poly(std::initializer_list<Rat> cs) { return Polynomial(std::vector<Rat>(cs)); }

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("polynomial arithmetic and rendering") {
  Polynomial zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.str("x") == "0");
  CHECK(zero.eval(Rat(5)) == 0);

  Polynomial p = poly({Rat(1), Rat(2), Rat(1)});  // (1+x)^2
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(1) == 2);
  CHECK(p.coefficient(7) == 0);
  CHECK(p.eval(Rat(3)) == 16);
  CHECK(p.eval(Rat(1, 2)) == Rat(9, 4));
  CHECK(p.integral());
  CHECK_FALSE(poly({Rat(1, 2)}).integral());

  Polynomial q = poly({Rat(1), Rat(1)});
  CHECK(q * q == p);
  CHECK(poly({Rat(0), Rat(1)}) + poly({Rat(1), Rat(1)}) == poly({Rat(1), Rat(2)}));
  // trailing zeros trim away, including through cancellation
  CHECK(poly({Rat(1), Rat(0), Rat(0)}).degree() == 0);
  CHECK((poly({Rat(1), Rat(1)}) + poly({Rat(1), Rat(-1)})).degree() == 0);

  CHECK(p.str("n") == "1 + 2*n + n^2");
  CHECK(poly({Rat(1), Rat(0), Rat(3, 2)}).str("x") == "1 + 3/2*x^2");
  CHECK(poly({Rat(-1), Rat(1)}).str("x") == "-1 + x");
  CHECK(poly({Rat(0), Rat(-2)}).str("x") == "-2*x");
  CHECK(poly({Rat(2), Rat(-1, 3)}).str("x") == "2 - 1/3*x");
}

TEST_CASE("lattice point counts of the standard bodies") {
  CHECK(ehrhart_counts(zoo::unit_interval(), 3) == std::vector<Int>{1, 2, 3, 4});
  CHECK(ehrhart_counts(zoo::unit_square(), 2) == std::vector<Int>{1, 4, 9});
  CHECK(ehrhart_counts(zoo::triangle213(), 2) == std::vector<Int>{1, 4, 10});
  CHECK(ehrhart_counts(zoo::ex03(), 2) == std::vector<Int>{1, 5, 15});
}

TEST_CASE("Ehrhart polynomials, frozen") {
  CHECK(ehrhart_polynomial(zoo::unit_interval()) == poly({Rat(1), Rat(1)}));
  CHECK(ehrhart_polynomial(zoo::unit_square()) == poly({Rat(1), Rat(2), Rat(1)}));
  CHECK(ehrhart_polynomial(zoo::unit_cube(3)) == poly({Rat(1), Rat(3), Rat(3), Rat(1)}));
  // standard simplex: binomial(n + d, d)
  CHECK(ehrhart_polynomial(zoo::unit_simplex(2)) == poly({Rat(1), Rat(3, 2), Rat(1, 2)}));
  CHECK(ehrhart_polynomial(zoo::unit_simplex(3)) ==
        poly({Rat(1), Rat(11, 6), Rat(1), Rat(1, 6)}));
  CHECK(ehrhart_polynomial(zoo::ex03()) == poly({Rat(1), Rat(2), Rat(3, 2), Rat(1, 2)}));
  CHECK(ehrhart_polynomial(zoo::triangle213()) == poly({Rat(1), Rat(3, 2), Rat(3, 2)}));
}

TEST_CASE("delta polynomials, frozen") {
  CHECK(delta_polynomial(zoo::unit_interval()) == poly({Rat(1)}));
  CHECK(delta_polynomial(zoo::unit_square()) == poly({Rat(1), Rat(1)}));
  CHECK(delta_polynomial(zoo::unit_cube(3)) == poly({Rat(1), Rat(4), Rat(1)}));
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    CHECK(delta_polynomial(zoo::unit_simplex(d)) == poly({Rat(1)}));
  }
  CHECK(delta_polynomial(zoo::ex03()) == poly({Rat(1), Rat(1), Rat(1)}));
  CHECK(delta_polynomial(zoo::triangle213()) == poly({Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("the central free sum: delta is not the product of the factor deltas") {
  VPolytope f = free_sum(zoo::ex03(), zoo::ex03());
  Polynomial dp = delta_polynomial(zoo::ex03());
  CHECK(delta_polynomial(f) == poly({Rat(1), Rat(2), Rat(3), Rat(3)}));
  CHECK(dp * dp == poly({Rat(1), Rat(2), Rat(3), Rat(2), Rat(1)}));
  CHECK(delta_polynomial(f) != dp * dp);
}

TEST_CASE("a free sum where the facet condition holds multiplies deltas") {
  // both factors have all facet offsets in {0, 1}
  VPolytope f = free_sum(zoo::unit_square(), zoo::unit_interval());
  CHECK(delta_polynomial(f) ==
        delta_polynomial(zoo::unit_square()) * delta_polynomial(zoo::unit_interval()));
}

TEST_CASE("interpolation invariants on a random corpus") {
  std::uint64_t seed = 0x5eed;
  for (int iter = 0; iter < 20; ++iter) {
    int dim = 2 + static_cast<int>(splitmix(seed) % 2);
    std::vector<LatticePoint> gens{LatticePoint(dim, Int(0))};
    for (int i = 0; i < dim + 2; ++i) {
      LatticePoint p(dim);
      for (int j = 0; j < dim; ++j) p[j] = static_cast<long>(splitmix(seed) % 4);
      gens.push_back(std::move(p));
    }
    if (affine_rank(gens) != dim + 1) continue;
    auto p = make_polytope(gens, "");
    CAPTURE(iter);

    auto ip = ehrhart_polynomial(p);
    CHECK(ip.degree() == dim);
    auto counts = ehrhart_counts(p, dim + 2);
    for (int n = 0; n <= dim + 2; ++n) CHECK(ip.eval(Rat(n)) == Rat(counts[n]));

    auto dl = delta_polynomial(p);
    CHECK(dl.integral());
    CHECK(dl.coefficient(0) == 1);
    CHECK(dl.coefficient(1) == Rat(counts[1]) - Rat(dim + 1));
    CHECK(dl.degree() <= dim);
    for (int j = 0; j <= dl.degree(); ++j) CHECK(dl.coefficient(j) >= 0);
  }
}
