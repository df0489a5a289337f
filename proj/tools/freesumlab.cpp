// freesumlab: exact free-sum toolkit for integral convex polytopes.
//
// Verdicts (idp = false, consistent = true, ...) are data and exit 0.
// Exit 1 covers usage, parse, and precondition problems; exit 2 means the
// toolkit contradicted itself (method disagreement, failed interpolation
// verification, consistent = false, a failing bundled claim).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/fuzz.hpp"
#include "freesumlab/hilbert.hpp"
#include "freesumlab/io.hpp"
#include "freesumlab/polytope.hpp"
#include "freesumlab/zoo.hpp"

namespace {

using freesumlab::Error;
using freesumlab::Errc;
using Json = freesumlab::io::Json;

struct Output {
  bool json = false;
  bool quiet = false;

  void line(const std::string& s) const {
    if (!quiet) std::cout << s << "\n";
  }
  void emit_json(const Json& j) const {
    if (!quiet) std::cout << j.dump(2) << "\n";
  }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_idp(const Output& out, const freesumlab::IdpResult& r, const std::string& mode) {
  if (out.json) {
    out.emit_json(freesumlab::io::json_idp(r, mode));
    return;
  }
  out.line("idp: " + bool_text(r.idp));
  out.line("mode: " + mode);
  out.line("levels checked: 2.." + freesumlab::to_string(r.levels_checked));
  if (r.witness) {
    out.line("witness level: " + freesumlab::to_string(r.witness->level));
    out.line("witness point: " + freesumlab::io::point_text(r.witness->point));
  }
}

void print_hilbert(const Output& out, const freesumlab::HilbertData& h) {
  if (out.json) {
    out.emit_json(freesumlab::io::json_hilbert(h));
    return;
  }
  out.line("cap: " + std::to_string(h.cap));
  std::ostringstream vals;
  vals << "H:";
  for (const auto& v : h.values) vals << ' ' << freesumlab::to_string(v);
  out.line(vals.str());
  out.line("h: " + h.h_poly.str("lambda"));
  out.line("stabilized: " + bool_text(h.stabilized));
}

void print_witness_sets(const Output& out, const std::vector<freesumlab::WitnessSet>& ws) {
  if (out.json) {
    out.emit_json(freesumlab::io::json_witness_sets(ws));
    return;
  }
  out.line("witness sets: " + std::to_string(ws.size()));
  for (const auto& w : ws) {
    std::ostringstream s;
    s << "subset:";
    for (const auto& p : w.subset) s << " (" << freesumlab::io::point_text(p) << ')';
    out.line(s.str());
    std::ostringstream in;
    in << "  interior:";
    for (const auto& p : w.interior_points) in << " (" << freesumlab::io::point_text(p) << ')';
    out.line(in.str());
    out.line("  min: " + freesumlab::io::rat_string(w.min_value));
  }
}

Json json_fuzz_report(const freesumlab::FuzzOutcome& o) {
  Json j;
  j["pairs"] = o.stats.pairs;
  j["origin_errors"] = o.stats.origin_errors;
  j["cond1_true"] = o.stats.cond1_true;
  j["cond1_false"] = o.stats.cond1_false;
  j["spans_both"] = o.stats.spans_both;
  j["hypothesis"] = o.stats.hypothesis;
  j["predicted_true"] = o.stats.predicted_true;
  j["predicted_false"] = o.stats.predicted_false;
  j["inconsistent"] = o.inconsistent;
  if (o.inconsistent) j["bad_index"] = o.bad_index;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact free-sum toolkit for integral convex polytopes"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.json, "machine-readable JSON reports");
  app.add_flag("--quiet", out.quiet, "suppress report output (exit code carries the verdict)");

  std::string file_a, file_b, out_path;
  long dilate = 1;
  int hilbert_cap = -1;
  long exhaustive = 0;
  bool skip_actual = false;

  freesumlab::FuzzConfig fuzz_cfg;
  bool no_origin = false;
  std::string reproducer = "fuzz-reproducer.json";

  int rc = 0;

  // Subcommands hand unmatched flags (--json, --quiet) back to the parent.
  auto sub = [&app](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* c_facets = sub("facets", "facet system of the hull");
  c_facets->add_option("file", file_a, "polytope file")->required();
  c_facets->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    const auto& fs = p.facets();
    if (out.json) {
      Json j = Json::array();
      for (const auto& f : fs) j.push_back(freesumlab::io::json_facet(f));
      out.emit_json(j);
    } else {
      for (const auto& f : fs) out.line(freesumlab::io::facet_text(f));
    }
  });

  auto* c_points = sub("points", "lattice points of a dilate");
  c_points->add_option("file", file_a, "polytope file")->required();
  c_points->add_option("--dilate", dilate, "dilation factor n >= 1")->check(CLI::PositiveNumber);
  c_points->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    auto pts = freesumlab::lattice_points(p, freesumlab::Int(dilate));
    if (out.json) {
      out.emit_json(freesumlab::io::json_points(pts));
    } else {
      for (const auto& z : pts) out.line(freesumlab::io::point_text(z));
    }
  });

  auto* c_ehrhart = sub("ehrhart", "Ehrhart polynomial i(P, n)");
  c_ehrhart->add_option("file", file_a, "polytope file")->required();
  c_ehrhart->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    auto poly = freesumlab::ehrhart_polynomial(p);
    if (out.json)
      out.emit_json(freesumlab::io::json_polynomial(poly, "n"));
    else
      out.line(poly.str("n"));
  });

  auto* c_delta = sub("delta", "delta polynomial (Ehrhart numerator)");
  c_delta->add_option("file", file_a, "polytope file")->required();
  c_delta->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    auto poly = freesumlab::delta_polynomial(p);
    if (out.json)
      out.emit_json(freesumlab::io::json_polynomial(poly, "lambda"));
    else
      out.line(poly.str("lambda"));
  });

  auto* c_hilbert = sub("hilbert", "Hilbert function and h polynomial");
  c_hilbert->add_option("file", file_a, "polytope file")->required();
  c_hilbert->add_option("--cap", hilbert_cap, "compute H(0..cap); default 4*dim+8");
  c_hilbert->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    auto a = freesumlab::configuration(p);
    int cap = hilbert_cap >= 0 ? hilbert_cap : freesumlab::default_h_cap(a.degree);
    print_hilbert(out, freesumlab::h_polynomial(a, cap));
  });

  auto* c_idp = sub("idp", "integer decomposition property");
  c_idp->add_option("file", file_a, "polytope file")->required();
  c_idp->add_option("--exhaustive", exhaustive, "scan levels 2..N verbatim instead")
      ->check(CLI::PositiveNumber);
  c_idp->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    if (exhaustive > 0)
      print_idp(out, freesumlab::idp_check_exhaustive(p, freesumlab::Int(exhaustive)),
                "exhaustive");
    else
      print_idp(out, freesumlab::idp_check(p), "bounded");
  });

  auto* c_wsets = sub("witness-sets", "witness sets W(P)");
  c_wsets->add_option("file", file_a, "polytope file")->required();
  c_wsets->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    print_witness_sets(out, freesumlab::witness_sets(p));
  });

  auto* c_fsum = sub("free-sum", "construct the free sum P (+) Q");
  c_fsum->add_option("file_p", file_a, "left factor file")->required();
  c_fsum->add_option("file_q", file_b, "right factor file")->required();
  c_fsum->add_option("-o,--output", out_path, "write the sum as a polytope file");
  c_fsum->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    auto q = freesumlab::io::read_polytope_file(file_b);
    auto f = freesumlab::free_sum(p, q);
    std::string body = freesumlab::io::polytope_file(f);
    if (out_path.empty()) {
      if (!out.quiet) std::cout << body;
    } else {
      std::ofstream o(out_path, std::ios::binary);
      if (!o) throw Error(Errc::invalid_argument, "cannot write " + out_path);
      o << body;
      out.line("wrote " + out_path);
    }
  });

  auto* c_check = sub("check", "full pair analysis (PairReport)");
  c_check->add_option("file_p", file_a, "left factor file")->required();
  c_check->add_option("file_q", file_b, "right factor file")->required();
  c_check->add_flag("--skip-actual", skip_actual, "skip the IDP run on the free sum itself");
  c_check->callback([&] {
    auto p = freesumlab::io::read_polytope_file(file_a);
    auto q = freesumlab::io::read_polytope_file(file_b);
    freesumlab::AnalyzeOptions opts;
    opts.skip_actual = skip_actual;
    auto r = freesumlab::analyze_pair(p, q, opts);
    if (out.json)
      out.emit_json(freesumlab::io::json_pair_report(r));
    else if (!out.quiet)
      std::cout << freesumlab::io::pair_report_text(r);
    if (!r.consistent) {
      std::cerr << "error: report is internally inconsistent\n";
      rc = 2;
    }
  });

  auto* c_examples = sub("examples", "run the bundled claim suite");
  c_examples->callback([&] {
    auto claims = freesumlab::zoo::run_claims();
    std::size_t passed = 0;
    if (out.json) {
      Json j = Json::array();
      for (const auto& c : claims) {
        Json e;
        e["locator"] = c.locator;
        e["statement"] = c.statement;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j.push_back(e);
        if (c.pass) ++passed;
      }
      out.emit_json(j);
    } else {
      for (const auto& c : claims) {
        std::string l = (c.pass ? "PASS  [" : "FAIL  [") + c.locator + "] " + c.statement;
        if (!c.pass && !c.detail.empty()) l += " (" + c.detail + ")";
        out.line(l);
        if (c.pass) ++passed;
      }
      out.line(std::to_string(passed) + "/" + std::to_string(claims.size()) + " claims hold");
    }
    if (passed != claims.size()) {
      std::cerr << "error: " << (claims.size() - passed) << " bundled claim(s) failed\n";
      rc = 2;
    }
  });

  auto* c_fuzz = sub("fuzz", "randomized pair corpus");
  c_fuzz->add_option("--dim-p", fuzz_cfg.dim_p, "left factor dimension")->check(CLI::PositiveNumber);
  c_fuzz->add_option("--dim-q", fuzz_cfg.dim_q, "right factor dimension")
      ->check(CLI::PositiveNumber);
  c_fuzz->add_option("--coord-bound", fuzz_cfg.coord_bound, "coordinates drawn from [0, c]")
      ->check(CLI::PositiveNumber);
  c_fuzz->add_option("--count", fuzz_cfg.count, "number of pairs");
  c_fuzz->add_option("--seed", fuzz_cfg.seed, "64-bit generator seed");
  c_fuzz->add_flag("--no-origin", no_origin, "do not force the origin as a generator");
  c_fuzz->add_option("--reproducer", reproducer, "where to write the offending pair");
  c_fuzz->callback([&] {
    fuzz_cfg.include_origin = !no_origin;
    auto o = freesumlab::run_fuzz(fuzz_cfg);
    if (out.json) {
      out.emit_json(json_fuzz_report(o));
    } else {
      out.line("pairs analyzed: " + std::to_string(o.stats.pairs));
      out.line("origin errors: " + std::to_string(o.stats.origin_errors));
      out.line("condition (1) true/false: " + std::to_string(o.stats.cond1_true) + "/" +
               std::to_string(o.stats.cond1_false));
      out.line("spans both: " + std::to_string(o.stats.spans_both));
      out.line("hypothesis pairs: " + std::to_string(o.stats.hypothesis));
      out.line("predicted idp true/false: " + std::to_string(o.stats.predicted_true) + "/" +
               std::to_string(o.stats.predicted_false));
      out.line(std::string("inconsistent: ") + bool_text(o.inconsistent));
    }
    if (o.inconsistent) {
      Json j;
      j["index"] = o.bad_index;
      j["p"] = Json::parse(freesumlab::io::polytope_file(*o.bad_p));
      j["q"] = Json::parse(freesumlab::io::polytope_file(*o.bad_q));
      j["report"] = freesumlab::io::json_pair_report(*o.bad_report);
      std::ofstream r(reproducer, std::ios::binary);
      if (r) r << j.dump(2) << "\n";
      std::cerr << "error: inconsistent pair at index " << o.bad_index << ", reproducer in "
                << reproducer << "\n";
      rc = 2;
    }
  });

  try {
    freesumlab::enumeration_cap();  // settle FREESUMLAB_MAX_POINTS before any work
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.internal_inconsistency() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
