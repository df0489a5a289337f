#include <algorithm>

#include "freesumlab/ehrhart.hpp"
#include "freesumlab/error.hpp"
#include "freesumlab/linalg.hpp"

namespace freesumlab {

namespace {

Rat canonical(Rat r) {
  r.canonicalize();
  return r;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (Rat& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::coefficient(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[j];
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return canonical(acc);
}

bool Polynomial::integral() const {
  for (const Rat& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

std::string Polynomial::str(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rat& c = coeffs_[j];
    if (c == 0) continue;
    Rat mag = c < 0 ? canonical(Rat(0) - c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (j == 0) {
      out += to_string(mag);
    } else {
      if (!unit) out += to_string(mag) + "*";
      out += variable;
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Int> ehrhart_counts(const VPolytope& p, int n_max) {
  if (n_max < 0) throw Error(Errc::invalid_argument, "negative dilation bound");
  std::vector<Int> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(count_lattice_points(p, Int(n)));
  return out;
}

Polynomial ehrhart_polynomial(const VPolytope& p) {
  const int d = p.affine_dim();
  std::vector<Int> counts = ehrhart_counts(p, d + 2);

  // Newton forward differences on nodes 0..d.
  std::vector<Rat> diff;
  diff.reserve(d + 1);
  for (int j = 0; j <= d; ++j) diff.emplace_back(counts[j]);
  for (int level = 1; level <= d; ++level)
    for (int j = d; j >= level; --j) diff[j] -= diff[j - 1];

  // i(n) = sum_j diff[j] * C(n, j); build C(n, j) as a polynomial in n.
  Polynomial result;
  Polynomial basis(std::vector<Rat>{Rat(1)});
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      // basis *= (n - (j-1)) / j
      Polynomial step(std::vector<Rat>{canonical(Rat(-(j - 1), j)), canonical(Rat(1, j))});
      basis = basis * step;
    }
    Polynomial term = basis * Polynomial(std::vector<Rat>{diff[j]});
    result = result + term;
  }

  for (int n = d + 1; n <= d + 2; ++n) {
    if (result.eval(Rat(n)) != Rat(counts[n]))
      throw Error(Errc::interpolation_mismatch,
                  "interpolated count at dilation " + std::to_string(n) + " is " +
                      to_string(result.eval(Rat(n))) + ", enumeration says " +
                      to_string(counts[n]) + " for " + p.name());
  }
  return result;
}

Polynomial delta_polynomial(const VPolytope& p) {
  const int d = p.affine_dim();
  std::vector<Int> counts = ehrhart_counts(p, d + 2);

  auto delta_at = [&](int j) {
    Int acc = 0;
    for (int k = 0; k <= d + 1 && k <= j; ++k) {
      Int term = binomial(d + 1, k) * counts[j - k];
      if (k % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  };

  for (int j = d + 1; j <= d + 2; ++j) {
    if (delta_at(j) != 0)
      throw Error(Errc::delta_tail_nonzero,
                  "delta coefficient " + std::to_string(j) + " of " + p.name() + " is " +
                      to_string(delta_at(j)) + ", expected 0 beyond degree " +
                      std::to_string(d));
  }

  std::vector<Rat> coeffs;
  coeffs.reserve(d + 1);
  for (int j = 0; j <= d; ++j) coeffs.emplace_back(delta_at(j));
  return Polynomial(std::move(coeffs));
}

}  // namespace freesumlab
