#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gkm/bivar_poly.hpp"
#include "gkm/embedded_graph.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

// One polynomial per vertex.  Members of the solution module satisfy, for
// every edge ij, that (y - a_ij x) divides parts[i] - parts[j].
struct CohomElement {
  std::vector<BivarPoly> parts;
  std::string to_json() const;  // array of polynomial strings
};

struct MembershipResult {
  bool member = false;
  Edge failing_edge{0, 0};  // first edge (lex order) violating divisibility
};
MembershipResult is_member(const EmbeddedGraph& g, const CohomElement& f);

// Basis of the homogeneous degree-k members, as coefficient vectors: entry
// b*m + (i-1) is the coefficient of x^(k-b) y^b in the part of vertex i.
struct DegreeBasis {
  int k = 0;
  RatMatrix vectors;  // one basis vector per row, (k+1)*m columns
};
DegreeBasis degree_basis(const EmbeddedGraph& g, int k);

CohomElement element_from_coeffs(int m, int k, const std::vector<Rat>& coeffs);
// Inverse of element_from_coeffs; parts must be zero or homogeneous of
// degree exactly k.
std::vector<Rat> coeffs_from_element(int m, int k, const CohomElement& f);

struct GeneratorSet {
  std::vector<std::pair<int, CohomElement>> generators;  // (degree, element), degrees ascending
  std::vector<long> degree_counts(int up_to) const;      // counts per degree 0..up_to
};

// Greedy free-module generators: in each degree k, extends the span of all
// monomial multiples of the generators found so far to a full basis of the
// degree-k members.  The number added in degree k must equal c_k
// (InternalError CountMismatch otherwise -- the module is free).
GeneratorSet module_generators(const EmbeddedGraph& g);

// The element (x_i*x + y_i*y)_i built from the vertex coordinates; always a
// member (checked, InternalError on violation).
CohomElement symplectic_form(const EmbeddedGraph& g);

CohomElement power(const CohomElement& f, int e);
CohomElement componentwise_product(const CohomElement& f, const CohomElement& h);

// True iff `candidate` generates freely: for every degree k up to
// (max generator degree) + K, the monomial multiples of the candidates are
// independent and span the full degree-k member space.
bool verify_basis(const EmbeddedGraph& g, const GeneratorSet& candidate);

// Componentwise product map into the cartesian product graph built with
// placement weights (a, b): the part at product vertex (i,s) is
// u.parts[i] * v.parts[s].  The result is checked for membership.
CohomElement kunneth_map(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Rat& a,
                         const Rat& b, const CohomElement& u, const CohomElement& v);

struct KunnethReport {
  std::vector<long> c1, c2, c3;  // characteristic numbers of factors and product
  bool convolution_ok = false;   // c3_k = sum_j c1_j * c2_(k-j)
  long samples_checked = 0;      // mapped basis pairs checked for membership
  bool samples_member_ok = false;
};
KunnethReport kunneth_check(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Rat& a,
                            const Rat& b);

}  // namespace gkm
