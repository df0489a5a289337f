#ifndef FREESUMLAB_ZOO_HPP
#define FREESUMLAB_ZOO_HPP

#include <string>
#include <vector>

#include "freesumlab/polytope.hpp"

namespace freesumlab::zoo {

// Bundled instances used across the claim suite and the tests.
VPolytope ex03();           // conv{(0,0,0),(1,1,0),(1,0,1),(0,1,1),(1,0,0)}
VPolytope unit_interval();  // conv{0,1}
VPolytope unit_square();
VPolytope unit_cube(int d);
VPolytope unit_simplex(int d);  // conv{0, e_1, ..., e_d}
VPolytope triangle213();        // conv{(0,0),(2,1),(1,2)}
VPolytope ex12b_left();         // conv{(0,0),(1,0),(1,2)}
VPolytope segment02();          // conv{0,2}

// One checked statement from the source text, with its locator.
struct ClaimResult {
  std::string locator;
  std::string statement;
  bool pass = false;
  std::string detail;  // filled on failure
};

// Runs every bundled claim; deterministic order.
std::vector<ClaimResult> run_claims();

}  // namespace freesumlab::zoo

#endif
