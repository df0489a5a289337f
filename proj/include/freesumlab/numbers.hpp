#ifndef FREESUMLAB_NUMBERS_HPP
#define FREESUMLAB_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace freesumlab {

// All arithmetic in this project is exact. Integers are arbitrary-precision,
// rationals are always kept in lowest terms with positive denominator.
// Careful: mpq_class does NOT canonicalize two-part construction like
// Rat(4, 2); whoever builds a fraction from separate numerator and
// denominator must call canonicalize() before the value escapes. Single
// integers and arithmetic on canonical values stay canonical.
using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;
using LatticePoint = IntVector;

inline bool is_zero_vector(const IntVector& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int dot(const IntVector& a, const IntVector& b);

// n choose k for small k, exact.
Int binomial(unsigned long n, unsigned long k);

// Decimal rendering; rationals render as "p/q" (or "p" when q == 1).
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

std::string point_str(const LatticePoint& p);

// Parses an exact integer in base 10; throws Error(invalid_argument) on junk.
Int parse_int(const std::string& s);
// Parses "p" or "p/q".
Rat parse_rat(const std::string& s);

// True when x fits in int64.
bool fits_i64(const Int& x);
std::int64_t to_i64(const Int& x);

}  // namespace freesumlab

#endif
