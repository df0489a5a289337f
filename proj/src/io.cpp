#include <fstream>
#include <sstream>

#include "freesumlab/error.hpp"
#include "freesumlab/io.hpp"
#include "freesumlab/linalg.hpp"

namespace freesumlab::io {

namespace {

constexpr long kCoordinateCap = 16;

void check_coordinate(const Int& c) {
  if (abs(c) > kCoordinateCap)
    throw Error(Errc::cap_exceeded, "coordinate " + to_string(c) + " exceeds the input cap of " +
                                        std::to_string(kCoordinateCap));
}

VPolytope from_points(std::vector<LatticePoint> pts, std::string name) {
  for (const auto& p : pts)
    for (const Int& c : p) check_coordinate(c);
  return make_polytope(std::move(pts), std::move(name));
}

VPolytope parse_json_polytope(const std::string& text, const std::string& default_name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::invalid_argument, std::string("bad polytope JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(Errc::invalid_argument, "polytope JSON needs a \"vertices\" array");

  std::string name = default_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw Error(Errc::invalid_argument, "polytope \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<LatticePoint> pts;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array())
      throw Error(Errc::invalid_argument, "each vertex must be an array of integers");
    LatticePoint p;
    for (const auto& c : row) {
      if (!c.is_number_integer())
        throw Error(Errc::invalid_argument, "vertex coordinates must be integers");
      p.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    }
    pts.push_back(std::move(p));
  }
  return from_points(std::move(pts), std::move(name));
}

VPolytope parse_text_polytope(const std::string& text, const std::string& default_name) {
  std::vector<LatticePoint> pts;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream fields(line);
    LatticePoint p;
    std::string tok;
    while (fields >> tok) {
      try {
        p.push_back(parse_int(tok));
      } catch (const Error&) {
        throw Error(Errc::invalid_argument, "line " + std::to_string(lineno) +
                                                ": not an integer: \"" + tok + "\"");
      }
    }
    pts.push_back(std::move(p));
  }
  return from_points(std::move(pts), default_name);
}

}  // namespace

VPolytope parse_polytope(const std::string& text, const std::string& default_name) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos)
    throw Error(Errc::empty_input, "empty polytope input");
  if (text[i] == '{') return parse_json_polytope(text, default_name);
  return parse_text_polytope(text, default_name);
}

VPolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  // default name = file stem
  std::string stem = path;
  size_t slash = stem.find_last_of("/\\");
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);

  return parse_polytope(buf.str(), stem);
}

std::string polytope_file(const VPolytope& p) {
  Json doc = Json::object();
  if (!p.name().empty()) doc["name"] = p.name();
  doc["vertices"] = json_points(p.vertices());
  return doc.dump(2) + "\n";
}

Json json_int(const Int& v) {
  if (fits_i64(v)) return Json(static_cast<std::int64_t>(to_i64(v)));
  return Json(to_string(v));
}

std::string rat_string(const Rat& r) { return to_string(r); }

Json json_point(const LatticePoint& p) {
  Json arr = Json::array();
  for (const Int& c : p) arr.push_back(json_int(c));
  return arr;
}

Json json_points(const std::vector<LatticePoint>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(json_point(p));
  return arr;
}

Json json_counts(const std::vector<Int>& counts) {
  Json arr = Json::array();
  for (const Int& c : counts) arr.push_back(to_string(c));
  return arr;
}

Json json_polynomial(const Polynomial& p, const std::string& variable) {
  Json doc = Json::object();
  doc["variable"] = variable;
  Json coeffs = Json::array();
  for (const Rat& c : p.coefficients()) coeffs.push_back(rat_string(c));
  doc["coefficients"] = coeffs;
  return doc;
}

Json json_facet(const Facet& f) {
  Json doc = Json::object();
  doc["normal"] = json_point(f.normal);
  doc["offset"] = json_int(f.offset);
  return doc;
}

Json json_witness(const DecompositionWitness& w) {
  Json doc = Json::object();
  doc["level"] = json_int(w.level);
  doc["point"] = json_point(w.point);
  doc["decomposable"] = w.decomposable;
  if (w.parts) doc["parts"] = json_points(*w.parts);
  return doc;
}

Json json_idp(const IdpResult& r, const std::string& mode) {
  Json doc = Json::object();
  doc["mode"] = mode;
  doc["levels_checked"] = json_int(r.levels_checked);
  doc["idp"] = r.idp;
  doc["witness"] = r.witness ? json_witness(*r.witness) : Json(nullptr);
  return doc;
}

Json json_hilbert(const HilbertData& h) {
  Json doc = Json::object();
  doc["cap"] = h.cap;
  doc["values"] = json_counts(h.values);
  doc["h_poly"] = json_polynomial(h.h_poly, "lambda");
  doc["stabilized"] = h.stabilized;
  return doc;
}

Json json_witness_set(const WitnessSet& w) {
  Json doc = Json::object();
  doc["subset"] = json_points(w.subset);
  doc["interior_points"] = json_points(w.interior_points);
  doc["min_value"] = rat_string(w.min_value);
  return doc;
}

Json json_witness_sets(const std::vector<WitnessSet>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(json_witness_set(w));
  return arr;
}

namespace {

Json json_opt_bool(const std::optional<bool>& b) {
  return b ? Json(*b) : Json(nullptr);
}

}  // namespace

Json json_pair_report(const PairReport& r) {
  Json doc = Json::object();
  doc["span_P"] = r.span_P;
  doc["span_Q"] = r.span_Q;
  doc["condition1_direct"] = r.condition1_direct;
  doc["condition1_prop"] = r.condition1_prop;
  doc["idp_P"] = r.idp_P;
  doc["idp_Q"] = r.idp_Q;
  doc["facet_cond_P"] = r.facet_cond_P;
  doc["facet_cond_Q"] = r.facet_cond_Q;
  doc["predicted_idp_free_sum"] = json_opt_bool(r.predicted_idp_free_sum);
  doc["actual_idp_free_sum"] = json_opt_bool(r.actual_idp_free_sum);
  doc["delta_P"] = json_polynomial(r.delta_P, "lambda");
  doc["delta_Q"] = json_polynomial(r.delta_Q, "lambda");
  doc["delta_free_sum"] = json_polynomial(r.delta_free_sum, "lambda");
  doc["delta_multiplicative"] = r.delta_multiplicative;
  doc["h_multiplicative"] = json_opt_bool(r.h_multiplicative);
  doc["consistent"] = r.consistent;
  return doc;
}

std::string point_text(const LatticePoint& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += " ";
    out += to_string(p[i]);
  }
  return out;
}

std::string facet_text(const Facet& f) {
  std::string out = "(";
  for (size_t i = 0; i < f.normal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(f.normal[i]);
  }
  out += ") . x <= " + to_string(f.offset);
  return out;
}

namespace {

std::string opt_bool_text(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string pair_report_text(const PairReport& r) {
  std::ostringstream out;
  out << "span_P:                 " << bool_text(r.span_P) << "\n";
  out << "span_Q:                 " << bool_text(r.span_Q) << "\n";
  out << "condition1_direct:      " << bool_text(r.condition1_direct) << "\n";
  out << "condition1_prop:        " << bool_text(r.condition1_prop) << "\n";
  out << "idp_P:                  " << bool_text(r.idp_P) << "\n";
  out << "idp_Q:                  " << bool_text(r.idp_Q) << "\n";
  out << "facet_cond_P:           " << bool_text(r.facet_cond_P) << "\n";
  out << "facet_cond_Q:           " << bool_text(r.facet_cond_Q) << "\n";
  out << "predicted_idp_free_sum: " << opt_bool_text(r.predicted_idp_free_sum) << "\n";
  out << "actual_idp_free_sum:    " << opt_bool_text(r.actual_idp_free_sum) << "\n";
  out << "delta_P:                " << r.delta_P.str("lambda") << "\n";
  out << "delta_Q:                " << r.delta_Q.str("lambda") << "\n";
  out << "delta_free_sum:         " << r.delta_free_sum.str("lambda") << "\n";
  out << "delta_multiplicative:   " << bool_text(r.delta_multiplicative) << "\n";
  out << "h_multiplicative:       " << opt_bool_text(r.h_multiplicative) << "\n";
  out << "consistent:             " << bool_text(r.consistent) << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace freesumlab::io
