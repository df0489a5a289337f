#ifndef FREESUMLAB_FUZZ_HPP
#define FREESUMLAB_FUZZ_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "freesumlab/freesum.hpp"
#include "freesumlab/polytope.hpp"

namespace freesumlab {

// Corpus generator settings. dims >= 1, coord_bound >= 1, count >= 1.
struct FuzzConfig {
  int dim_p = 2;
  int dim_q = 2;
  long coord_bound = 2;
  long count = 50;
  std::uint64_t seed = 0;
  // Origin as a forced generator keeps the free-sum preconditions valid by
  // construction; turning it off exercises the error paths instead.
  bool include_origin = true;
};

// Deterministic pair stream (splitmix64): the n-th pair depends only on the
// seed and its position, never on consumer timing.
class FuzzGenerator {
 public:
  explicit FuzzGenerator(const FuzzConfig& config);

  // Hull of the origin (when configured) plus up to dim+3 random points with
  // coordinates in [0, coord_bound]; non-full-dimensional draws discarded.
  std::pair<VPolytope, VPolytope> next_pair();

 private:
  VPolytope draw_polytope(int dim, const char* side);
  std::uint64_t next();

  FuzzConfig config_;
  std::uint64_t state_ = 0;
  long drawn_ = 0;
};

struct FuzzStats {
  long pairs = 0;          // pairs analyzed to completion
  long origin_errors = 0;  // pairs rejected for a missing origin (include_origin = false)
  long cond1_true = 0;
  long cond1_false = 0;
  long spans_both = 0;     // span_P and span_Q
  long hypothesis = 0;     // spans_both and condition (1)
  long predicted_true = 0;
  long predicted_false = 0;
};

struct FuzzOutcome {
  FuzzStats stats;
  // First consistent=false report, kept for replay. bad_index counts pairs
  // from zero in generation order.
  bool inconsistent = false;
  long bad_index = -1;
  std::optional<VPolytope> bad_p, bad_q;
  std::optional<PairReport> bad_report;
};

// Observer invoked once per analyzed pair, in generation order, on the
// calling thread.
using PairHook =
    std::function<void(long index, const VPolytope& p, const VPolytope& q, const PairReport& r)>;

// Generates config.count pairs, analyzes each on a work pool, merges results
// in generation order, stops at the first consistent=false report. Errors
// other than origin_missing propagate (earliest generation index wins).
FuzzOutcome run_fuzz(const FuzzConfig& config, const PairHook& on_pair = {});

}  // namespace freesumlab

#endif
