#ifndef FREESUMLAB_HILBERT_HPP
#define FREESUMLAB_HILBERT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/numbers.hpp"
#include "freesumlab/polytope.hpp"

namespace freesumlab {

// Generating set of the lifted point monoid: the degree-one lattice points
// of a polytope placed at height one.
struct Configuration {
  int ambient = 0;  // lifted dimension, polytope dimension + 1
  int degree = 0;   // dimension of the underlying polytope
  std::vector<LatticePoint> points;  // lex-sorted
};

Configuration configuration(const VPolytope& p);

// Successive sumset sizes: sizes[n] = |S_n| where S_0 = {0} and
// S_{n+1} = S_n + gens. With track_first set, also reports every point
// reached within n_max levels together with the first level it appears at
// (lex-sorted by point); callers who track must include the zero vector in
// gens so the levels nest.
struct SumsetScan {
  std::vector<Int> sizes;
  std::vector<std::pair<LatticePoint, int>> first;
};
SumsetScan sumset_scan(const std::vector<LatticePoint>& gens, int n_max, bool track_first);

// Hilbert function H(0..n_max) of the monoid generated by the configuration.
std::vector<Int> hilbert_function(const Configuration& a, int n_max);

// Numerator coefficients of sum_n H(n) lambda^n against (1-lambda)^{degree+1}:
// h_j = sum_k (-1)^k C(degree+1, k) H(j-k). stabilized means the last
// degree+2 computed coefficients all vanish, i.e. the window shows the
// series has collapsed to a polynomial numerator. Non-stabilization is data,
// not an error; h_poly then holds the truncated partial transform.
struct HilbertData {
  std::vector<Int> values;  // H(0..cap)
  Polynomial h_poly;
  bool stabilized = false;
  int cap = 0;
};

HilbertData h_polynomial(const Configuration& a, int cap);  // pre: cap >= degree+3
// Retries with doubled cap (up to max_cap) until the window stabilizes;
// returns the last attempt either way.
HilbertData h_polynomial_auto(const Configuration& a, int initial_cap, int max_cap);

inline int default_h_cap(int degree) { return 4 * degree + 8; }

// Certificate for a failed (or demonstrated) decomposition: a point of
// level*P that is, or is not, a sum of `level` degree-one points.
struct DecompositionWitness {
  Int level;
  LatticePoint point;
  bool decomposable = false;
  std::optional<std::vector<LatticePoint>> parts;
};

// Integer decomposition property. The bounded check covers levels
// 2..max(1, degree-1), which decides IDP outright (higher levels decompose
// automatically); the exhaustive variant scans 2..max_level verbatim.
struct IdpResult {
  bool idp = true;
  Int levels_checked = 1;  // top of the scanned range
  std::optional<DecompositionWitness> witness;
};

IdpResult idp_check(const VPolytope& p);
IdpResult idp_check_exhaustive(const VPolytope& p, const Int& max_level);

// Greedy-with-backtracking search for n degree-one points summing to z in
// n*P. Complete: returns nullopt only when no decomposition exists.
std::optional<std::vector<LatticePoint>> decompose_point(const VPolytope& p,
                                                         const LatticePoint& z, const Int& n);

}  // namespace freesumlab

#endif
