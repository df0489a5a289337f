#ifndef FREESUMLAB_EHRHART_HPP
#define FREESUMLAB_EHRHART_HPP

#include <string>
#include <vector>

#include "freesumlab/numbers.hpp"
#include "freesumlab/polytope.hpp"

namespace freesumlab {

// Dense univariate polynomial with exact rational coefficients, ascending
// order, no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(int j) const;
  Rat eval(const Rat& x) const;
  bool integral() const;  // all coefficients integers

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // "1 + 2*x + x^3" style rendering; "0" for the zero polynomial.
  std::string str(const std::string& variable) const;

 private:
  std::vector<Rat> coeffs_;
};

// Lattice point counts of 0*P .. n_max*P.
std::vector<Int> ehrhart_counts(const VPolytope& p, int n_max);

// Ehrhart polynomial via Newton interpolation on 0..d, independently checked
// at d+1 and d+2. Throws Error(interpolation_mismatch) when the check fails.
Polynomial ehrhart_polynomial(const VPolytope& p);

// delta (h*) coefficients: delta_j = sum_k (-1)^k C(d+1, k) i(j-k), j = 0..d.
// The same sums at j = d+1, d+2 must vanish; otherwise throws
// Error(delta_tail_nonzero).
Polynomial delta_polynomial(const VPolytope& p);

}  // namespace freesumlab

#endif
