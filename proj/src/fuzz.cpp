#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "freesumlab/error.hpp"
#include "freesumlab/fuzz.hpp"

namespace freesumlab {

namespace {

void check_config(const FuzzConfig& c) {
  if (c.dim_p < 1 || c.dim_q < 1)
    throw Error(Errc::invalid_argument, "fuzz dimensions must be >= 1");
  if (c.coord_bound < 1) throw Error(Errc::invalid_argument, "coord_bound must be >= 1");
  if (c.count < 1) throw Error(Errc::invalid_argument, "count must be >= 1");
  if (c.dim_p + c.dim_q > dimension_cap())
    throw Error(Errc::cap_exceeded,
                "fuzz pair needs ambient dimension " + std::to_string(c.dim_p + c.dim_q) +
                    " for the free sum, cap is " + std::to_string(dimension_cap()));
}

}  // namespace

FuzzGenerator::FuzzGenerator(const FuzzConfig& config) : config_(config), state_(config.seed) {
  check_config(config_);
}

std::uint64_t FuzzGenerator::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

VPolytope FuzzGenerator::draw_polytope(int dim, const char* side) {
  const auto span = static_cast<std::uint64_t>(config_.coord_bound) + 1;
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<LatticePoint> pts;
    if (config_.include_origin) pts.emplace_back(dim, Int(0));
    const int extra = dim + static_cast<int>(next() % 4);
    for (int i = 0; i < extra; ++i) {
      LatticePoint p(dim);
      for (int j = 0; j < dim; ++j) p[j] = static_cast<long>(next() % span);
      pts.push_back(std::move(p));
    }
    VPolytope cand =
        make_polytope(std::move(pts), std::string("fuzz-") + side + std::to_string(drawn_));
    if (cand.full_dimensional()) return cand;
  }
  throw Error(Errc::internal, "fuzz generator kept drawing degenerate polytopes");
}

std::pair<VPolytope, VPolytope> FuzzGenerator::next_pair() {
  ++drawn_;
  VPolytope p = draw_polytope(config_.dim_p, "P");
  VPolytope q = draw_polytope(config_.dim_q, "Q");
  return {std::move(p), std::move(q)};
}

namespace {

struct Slot {
  bool done = false;
  bool origin_error = false;
  std::optional<PairReport> report;
  std::exception_ptr error;
};

}  // namespace

FuzzOutcome run_fuzz(const FuzzConfig& config, const PairHook& on_pair) {
  check_config(config);

  // Generation is sequential so the corpus depends only on the seed.
  FuzzGenerator gen(config);
  const auto n = static_cast<std::size_t>(config.count);
  std::vector<std::pair<VPolytope, VPolytope>> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pairs.push_back(gen.next_pair());

  // Analysis runs on a pool; slots are merged in generation order below.
  std::vector<Slot> slots(n);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      Slot& s = slots[i];
      try {
        s.report = analyze_pair(pairs[i].first, pairs[i].second);
      } catch (const Error& e) {
        if (e.code() == Errc::origin_missing && !config.include_origin)
          s.origin_error = true;
        else
          s.error = std::current_exception();
      } catch (...) {
        s.error = std::current_exception();
      }
      s.done = true;
    }
  };

  unsigned pool = std::thread::hardware_concurrency();
  if (pool == 0) pool = 1;
  if (pool > 8) pool = 8;
  if (pool > n) pool = static_cast<unsigned>(n);
  {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  FuzzOutcome out;
  for (std::size_t i = 0; i < n; ++i) {
    Slot& s = slots[i];
    if (s.error) std::rethrow_exception(s.error);
    if (s.origin_error) {
      ++out.stats.origin_errors;
      continue;
    }
    const PairReport& r = *s.report;
    ++out.stats.pairs;
    (r.condition1_direct ? out.stats.cond1_true : out.stats.cond1_false) += 1;
    const bool spans = r.span_P && r.span_Q;
    if (spans) ++out.stats.spans_both;
    if (spans && r.condition1_direct) ++out.stats.hypothesis;
    if (r.predicted_idp_free_sum)
      (*r.predicted_idp_free_sum ? out.stats.predicted_true : out.stats.predicted_false) += 1;
    if (on_pair) on_pair(static_cast<long>(i), pairs[i].first, pairs[i].second, r);
    if (!r.consistent) {
      out.inconsistent = true;
      out.bad_index = static_cast<long>(i);
      out.bad_p = pairs[i].first;
      out.bad_q = pairs[i].second;
      out.bad_report = r;
      break;
    }
  }
  return out;
}

}  // namespace freesumlab
