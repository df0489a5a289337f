#ifndef FREESUMLAB_IO_HPP
#define FREESUMLAB_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/freesum.hpp"
#include "freesumlab/hilbert.hpp"
#include "freesumlab/polytope.hpp"

namespace freesumlab::io {

// Insertion-ordered JSON keeps every report byte-stable.
using Json = nlohmann::ordered_json;

// Polytope files: JSON {"name": optional string, "vertices": [[int,...],...]}
// or plaintext with one whitespace-separated point per line and '#' comment
// lines. Sniffed by the first non-space byte. Coordinates are capped at
// |c| <= 16 (clean Error(cap_exceeded) beyond).
VPolytope read_polytope_file(const std::string& path);
VPolytope parse_polytope(const std::string& text, const std::string& default_name);

// Round-trippable polytope file body (JSON form, trailing newline).
std::string polytope_file(const VPolytope& p);

// Exact renderings. Integers that fit in 64 bits serialize as JSON numbers;
// anything wider falls back to a decimal string. Rationals are always
// "p/q" (or plain "k") strings.
Json json_int(const Int& v);
std::string rat_string(const Rat& r);
Json json_point(const LatticePoint& p);
Json json_points(const std::vector<LatticePoint>& ps);
Json json_counts(const std::vector<Int>& counts);
Json json_polynomial(const Polynomial& p, const std::string& variable);
Json json_facet(const Facet& f);
Json json_witness(const DecompositionWitness& w);
Json json_idp(const IdpResult& r, const std::string& mode);
Json json_hilbert(const HilbertData& h);
Json json_witness_set(const WitnessSet& w);
Json json_witness_sets(const std::vector<WitnessSet>& ws);
Json json_pair_report(const PairReport& r);

std::string point_text(const LatticePoint& p);
std::string facet_text(const Facet& f);
std::string pair_report_text(const PairReport& r);

}  // namespace freesumlab::io

#endif
