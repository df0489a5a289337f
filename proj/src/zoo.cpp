#include <algorithm>
#include <functional>
#include <initializer_list>
#include <sstream>

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/hilbert.hpp"
#include "freesumlab/io.hpp"
#include "freesumlab/linalg.hpp"
#include "freesumlab/zoo.hpp"

namespace freesumlab::zoo {

namespace {

LatticePoint pt(std::initializer_list<long> cs) {
  LatticePoint p;
  for (long c : cs) p.emplace_back(c);
  return p;
}

}  // namespace

VPolytope ex03() {
  return make_polytope({pt({0, 0, 0}), pt({1, 1, 0}), pt({1, 0, 1}), pt({0, 1, 1}),
                        pt({1, 0, 0})},
                       "ex03");
}

VPolytope unit_interval() { return make_polytope({pt({0}), pt({1})}, "unit-interval"); }

VPolytope unit_square() {
  return make_polytope({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}, "unit-square");
}

VPolytope unit_cube(int d) {
  std::vector<LatticePoint> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    LatticePoint p(d);
    for (int j = 0; j < d; ++j) p[j] = (mask >> j) & 1;
    pts.push_back(std::move(p));
  }
  return make_polytope(std::move(pts), "unit-cube-" + std::to_string(d));
}

VPolytope unit_simplex(int d) {
  std::vector<LatticePoint> pts{LatticePoint(d, Int(0))};
  for (int j = 0; j < d; ++j) {
    LatticePoint e(d, Int(0));
    e[j] = 1;
    pts.push_back(std::move(e));
  }
  return make_polytope(std::move(pts), "unit-simplex-" + std::to_string(d));
}

VPolytope triangle213() {
  return make_polytope({pt({0, 0}), pt({2, 1}), pt({1, 2})}, "triangle213");
}

VPolytope ex12b_left() {
  return make_polytope({pt({0, 0}), pt({1, 0}), pt({1, 2})}, "ex12b-left");
}

VPolytope segment02() { return make_polytope({pt({0}), pt({2})}, "segment02"); }

namespace {

using Check = std::function<bool(std::string&)>;

ClaimResult run_one(const std::string& locator, const std::string& statement, const Check& fn) {
  ClaimResult r;
  r.locator = locator;
  r.statement = statement;
  try {
    r.pass = fn(r.detail);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

std::string poly_str(const Polynomial& p) { return p.str("lambda"); }

}  // namespace

std::vector<ClaimResult> run_claims() {
  std::vector<ClaimResult> out;
  auto claim = [&](const std::string& locator, const std::string& statement, const Check& fn) {
    out.push_back(run_one(locator, statement, fn));
  };

  claim("Example 1.2(c)", "the set {(2,1),(1,2)} is linearly independent", [](std::string& d) {
    int r = rank({pt({2, 1}), pt({1, 2})});
    if (r == 2) return true;
    d = "rank came out " + std::to_string(r);
    return false;
  });

  claim("Example 0.3", "all five listed points are vertices", [](std::string& d) {
    VPolytope p = ex03();
    if (p.vertices().size() == 5 && p.generators() == p.vertices()) return true;
    d = "vertex count " + std::to_string(p.vertices().size());
    return false;
  });

  claim("Example 0.3", "z1+z2+z3 = 2 supports a facet", [](std::string& d) {
    Facet want{pt({1, 1, 1}), Int(2)};
    VPolytope p = ex03();
    for (const Facet& f : p.facets())
      if (f == want) return true;
    d = "facet (1,1,1) <= 2 not found";
    return false;
  });

  claim("Example 0.3", "(1,1,1) violates the facet, so it is outside P", [](std::string& d) {
    if (!contains_in_dilate(ex03(), pt({1, 1, 1}), 1)) return true;
    d = "(1,1,1) reported inside";
    return false;
  });

  claim("Example 0.3", "facet b-condition fails (a facet has b = 2)", [](std::string& d) {
    if (!facet_b_condition(ex03())) return true;
    d = "facet_b_condition returned true";
    return false;
  });

  claim("§2, H(K[A],0) = 1", "Hilbert function starts at 1", [](std::string& d) {
    for (const VPolytope& p : {ex03(), triangle213(), unit_square()}) {
      auto v = hilbert_function(configuration(p), 0);
      if (v.at(0) != 1) {
        d = "H(0) != 1 for " + p.name();
        return false;
      }
    }
    return true;
  });

  claim("§2, H(K[A],1) = |P ∩ Z^d|", "degree-one piece counts the lattice points",
        [](std::string& d) {
          for (const VPolytope& p : {ex03(), triangle213(), unit_square()}) {
            auto v = hilbert_function(configuration(p), 1);
            if (v.at(1) != Int(static_cast<unsigned long>(p.unit_lattice_points().size()))) {
              d = "H(1) mismatch for " + p.name();
              return false;
            }
          }
          return true;
        });

  claim("Example 0.3", "P possesses the integer decomposition property", [](std::string& d) {
    IdpResult r = idp_check(ex03());
    if (r.idp) return true;
    d = "idp_check said false";
    return false;
  });

  claim("Example 0.3", "P (+) P fails the integer decomposition property, witness at level <= 5",
        [](std::string& d) {
          VPolytope f = free_sum(ex03(), ex03());
          IdpResult r = idp_check(f);
          if (r.idp || !r.witness) {
            d = "idp_check said true or carried no witness";
            return false;
          }
          if (r.witness->level > 5) {
            d = "witness level " + to_string(r.witness->level) + " > 5";
            return false;
          }
          // Independent confirmation: the witness really has no decomposition.
          if (decompose_point(f, r.witness->point, r.witness->level)) {
            d = "witness point decomposed after all";
            return false;
          }
          return true;
        });

  claim("§0, dim(P ⊕ Q) = dim P + dim Q", "free-sum dimension adds: dim(P (+) P) = 6",
        [](std::string& d) {
          VPolytope f = free_sum(ex03(), ex03());
          if (f.affine_dim() == 6) return true;
          d = "affine dim " + std::to_string(f.affine_dim());
          return false;
        });

  claim("Example 1.2(c)", "W(P) is a single witness set with min = 2/3", [](std::string& d) {
    auto ws = witness_sets(triangle213());
    if (ws.size() != 1) {
      d = "witness set count " + std::to_string(ws.size());
      return false;
    }
    std::vector<LatticePoint> want{pt({1, 2}), pt({2, 1})};
    std::sort(want.begin(), want.end());
    auto got = ws[0].subset;
    std::sort(got.begin(), got.end());
    if (got != want) {
      d = "unexpected subset";
      return false;
    }
    if (ws[0].min_value != Rat(2, 3)) {
      d = "min " + io::rat_string(ws[0].min_value);
      return false;
    }
    return true;
  });

  claim("Example 1.2(a)", "the (0,1)-polytope of Example 0.3 has W(P) = ∅", [](std::string& d) {
    auto ws = witness_sets(ex03());
    if (ws.empty()) return true;
    d = std::to_string(ws.size()) + " witness sets found";
    return false;
  });

  claim("Example 1.2(b)", "W(conv{0,2}) = {{2}} with min = 1/2", [](std::string& d) {
    auto ws = witness_sets(segment02());
    if (ws.size() != 1 || ws[0].subset != std::vector<LatticePoint>{pt({2})}) {
      d = "unexpected witness family";
      return false;
    }
    if (ws[0].min_value != Rat(1, 2)) {
      d = "min " + io::rat_string(ws[0].min_value);
      return false;
    }
    return true;
  });

  claim("Example 1.2(a)", "condition (1) holds for the pair (P, P) of Example 0.3",
        [](std::string& d) {
          if (condition1(ex03(), ex03(), Condition1Method::both)) return true;
          d = "condition1 returned false";
          return false;
        });

  claim("Example 1.2(b)", "condition (1) holds for (conv{(0,0),(1,0),(1,2)}, conv{0,2})",
        [](std::string& d) {
          if (condition1(ex12b_left(), segment02(), Condition1Method::both)) return true;
          d = "condition1 returned false";
          return false;
        });

  claim("Example 0.3 + Theorem 0.1",
        "analyze(P, P): IDP factors, facet condition fails both sides, predicted = actual = "
        "false, consistent",
        [](std::string& d) {
          PairReport r = analyze_pair(ex03(), ex03());
          std::ostringstream why;
          if (!r.idp_P || !r.idp_Q) why << "factor idp wrong; ";
          if (r.facet_cond_P || r.facet_cond_Q) why << "facet_cond wrong; ";
          if (!r.predicted_idp_free_sum || *r.predicted_idp_free_sum) why << "predicted wrong; ";
          if (!r.actual_idp_free_sum || *r.actual_idp_free_sum) why << "actual wrong; ";
          if (!r.consistent) why << "consistent false; ";
          d = why.str();
          return d.empty();
        });

  claim("Example 1.2(b) + Theorem 0.1",
        "analyze(conv{(0,0),(1,0),(1,2)}, conv{0,2}): condition (1), facet_cond_P, predicted = "
        "actual = true",
        [](std::string& d) {
          PairReport r = analyze_pair(ex12b_left(), segment02());
          std::ostringstream why;
          if (!r.condition1_direct || !r.condition1_prop) why << "condition1 wrong; ";
          if (!r.facet_cond_P) why << "facet_cond_P wrong; ";
          if (!r.predicted_idp_free_sum || !*r.predicted_idp_free_sum) why << "predicted wrong; ";
          if (!r.actual_idp_free_sum || !*r.actual_idp_free_sum) why << "actual wrong; ";
          if (!r.consistent) why << "consistent false; ";
          d = why.str();
          return d.empty();
        });

  claim("Example 0.3 + Theorem 1.4", "δ(P ⊕ P) differs from δ(P)² (facet condition fails)",
        [](std::string& d) {
          VPolytope f = free_sum(ex03(), ex03());
          Polynomial dp = delta_polynomial(ex03());
          Polynomial df = delta_polynomial(f);
          if (df == dp * dp) {
            d = "delta turned out multiplicative: " + poly_str(df);
            return false;
          }
          return true;
        });

  return out;
}

}  // namespace freesumlab::zoo
