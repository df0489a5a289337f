#ifndef FREESUMLAB_FREESUM_HPP
#define FREESUMLAB_FREESUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/hilbert.hpp"
#include "freesumlab/numbers.hpp"
#include "freesumlab/polytope.hpp"

namespace freesumlab {

// Convex hull of P x {0} and {0} x Q in R^{d+e}. Both factors must contain
// the origin (Error(origin_missing) names the offending side). The result
// remembers its factors, so dilate enumeration and membership run on the
// factor facet systems.
VPolytope free_sum(const VPolytope& p, const VPolytope& q);

// Linearly independent subset W of V(P)\{0} whose spanned simplex
// conv(W u {0}) has lattice points in its relative interior: exactly the
// points sum r_i w_i with every r_i > 0 and sum r_i < 1. min_value is the
// least such coefficient sum; always strictly between 0 and 1.
struct WitnessSet {
  std::vector<LatticePoint> subset;
  std::vector<LatticePoint> interior_points;  // lex-sorted
  Rat min_value;
};

// All witness sets of P, ordered by subset (lex over the vertex list).
// Pre: origin in P, full-dimensional.
std::vector<WitnessSet> witness_sets(const VPolytope& p);

enum class Condition1Method { direct, proposition, both };

// Whether the lattice points of P (+) Q are exactly the embedded lattice
// points of the factors. direct enumerates and compares; proposition tests
// min(F) + min(G) > 1 over all witness-set pairs; both runs the two and
// throws Error(methods_disagree) if they differ.
bool condition1(const VPolytope& p, const VPolytope& q,
                Condition1Method method = Condition1Method::both);

// IDP of a free sum whose degree-one points are exactly the embedded factor
// points, i.e. condition (1) holds (callers must have established that).
// Decides the same bounded range as idp_check but works on the factor
// dilation norms instead of enumerated sum points, which is what makes the
// randomized corpora affordable. Falls back to the generic scan when the
// int64 certification fails.
IdpResult idp_check_freesum_embedded(const VPolytope& f);

struct AnalyzeOptions {
  bool skip_actual = false;  // skip the (expensive) IDP run on the free sum
};

// Aggregated verdicts for one factor pair. Verdicts are data; consistent
// flags any violation of the cross-identities the report is built to check
// (and a false here is either a bug or a genuine counterexample, so callers
// must halt loudly).
struct PairReport {
  bool span_P = false, span_Q = false;
  bool condition1_direct = false, condition1_prop = false;
  bool idp_P = false, idp_Q = false;
  bool facet_cond_P = false, facet_cond_Q = false;
  std::optional<bool> predicted_idp_free_sum;  // set iff spans and condition (1) hold
  std::optional<bool> actual_idp_free_sum;     // unset only under skip_actual
  Polynomial delta_P, delta_Q, delta_free_sum;
  bool delta_multiplicative = false;
  std::optional<bool> h_multiplicative;  // set when condition (1) holds and
                                         // the h-window stabilized
  bool consistent = false;
  std::vector<std::string> warnings;  // text-report only, not part of the
                                      // JSON schema
};

PairReport analyze_pair(const VPolytope& p, const VPolytope& q,
                        const AnalyzeOptions& options = {});

}  // namespace freesumlab

#endif
