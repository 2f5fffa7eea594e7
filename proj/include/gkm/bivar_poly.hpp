#pragma once

#include <map>
#include <string>
#include <utility>

#include "gkm/rational.hpp"

namespace gkm {

// Sparse bivariate polynomial over Rat.  Terms are keyed by (deg_x, deg_y);
// zero coefficients are never stored, so the zero polynomial has no terms.
class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;  // (deg_x, deg_y)
  using TermMap = std::map<Exponents, Rat>;

  BivarPoly() = default;

  static BivarPoly constant(const Rat& c) { return monomial(0, 0, c); }
  static BivarPoly monomial(int dx, int dy, const Rat& c);
  static BivarPoly var_x() { return monomial(1, 0, Rat(1)); }
  static BivarPoly var_y() { return monomial(0, 1, Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(int dx, int dy) const;

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(int k) const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly scaled(const Rat& c) const;
  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivarPoly& o) const { return terms_ != o.terms_; }

  // p(x, a*x): every term lands on (deg_x + deg_y, 0).
  BivarPoly substitute_y(const Rat& a) const;

  // Human form, graded order, highest degree first: "x^2-2*x*y+y^2", "0".
  std::string str() const;

 private:
  TermMap terms_;
  void add_term(int dx, int dy, const Rat& c);
};

// True iff (y - a*x) divides p; equivalent to p(x, a*x) being identically
// zero, since substituting the root of the linear factor kills exactly the
// multiples of that factor.
bool divisible_by_linear(const BivarPoly& p, const Rat& a);

}  // namespace gkm
