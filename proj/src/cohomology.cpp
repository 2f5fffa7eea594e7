#include "gkm/cohomology.hpp"

#include <json.hpp>

#include <algorithm>

#include "gkm/linalg.hpp"
#include "gkm/profile.hpp"

namespace gkm {

using nlohmann::json;

std::string CohomElement::to_json() const {
  json j = json::array();
  for (const BivarPoly& p : parts) j.push_back(p.str());
  return j.dump();
}

MembershipResult is_member(const EmbeddedGraph& g, const CohomElement& f) {
  if (static_cast<int>(f.parts.size()) != g.vertex_count())
    throw InputError(InputError::Kind::BadInput, "is_member: wrong number of parts");
  for (const Edge& e : g.edges()) {
    const BivarPoly diff = f.parts[e.first - 1] - f.parts[e.second - 1];
    if (!divisible_by_linear(diff, g.slope(e))) return {false, e};
  }
  return {true, {0, 0}};
}

DegreeBasis degree_basis(const EmbeddedGraph& g, int k) {
  if (k < 0) throw InputError(InputError::Kind::BadInput, "degree_basis: k < 0");
  return {k, right_kernel_basis(build_mk(g, k))};
}

CohomElement element_from_coeffs(int m, int k, const std::vector<Rat>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(k + 1) * m)
    throw InputError(InputError::Kind::BadInput, "element_from_coeffs: wrong length");
  CohomElement f;
  f.parts.assign(m, BivarPoly());
  for (int b = 0; b <= k; ++b)
    for (int i = 0; i < m; ++i) {
      const Rat& c = coeffs[static_cast<std::size_t>(b) * m + i];
      if (!c.is_zero())
        f.parts[i] = f.parts[i] + BivarPoly::monomial(k - b, b, c);
    }
  return f;
}

std::vector<Rat> coeffs_from_element(int m, int k, const CohomElement& f) {
  if (static_cast<int>(f.parts.size()) != m)
    throw InputError(InputError::Kind::BadInput, "coeffs_from_element: wrong number of parts");
  std::vector<Rat> v(static_cast<std::size_t>(k + 1) * m, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (!f.parts[i].is_homogeneous(k))
      throw InputError(InputError::Kind::BadInput,
                       "coeffs_from_element: part not homogeneous of the stated degree");
    for (const auto& [e, c] : f.parts[i].terms())
      v[static_cast<std::size_t>(e.second) * m + i] = c;
  }
  return v;
}

std::vector<long> GeneratorSet::degree_counts(int up_to) const {
  std::vector<long> n(up_to + 1, 0);
  for (const auto& [d, f] : generators)
    if (d <= up_to) ++n[d];
  return n;
}

GeneratorSet module_generators(const EmbeddedGraph& g) {
  const int m = g.vertex_count();
  const CharProfile profile = char_profile(g);

  GeneratorSet out;
  for (int k = 0; k <= profile.K + 1; ++k) {
    // Span of x^a y^b * (earlier generators) inside degree k.
    RrefAccumulator span(static_cast<std::size_t>(k + 1) * m);
    std::size_t expected = 0;
    for (const auto& [d, gen] : out.generators)
      for (int b = 0; b <= k - d; ++b) {
        CohomElement shifted;
        shifted.parts.reserve(m);
        const BivarPoly mono = BivarPoly::monomial(k - d - b, b, Rat(1));
        for (const BivarPoly& p : gen.parts) shifted.parts.push_back(mono * p);
        if (!span.insert(coeffs_from_element(m, k, shifted)))
          throw InternalError("module_generators: dependent monomial multiples (freeness)");
        ++expected;
      }

    const DegreeBasis basis = degree_basis(g, k);
    long added = 0;
    for (std::size_t rr = 0; rr < basis.vectors.rows(); ++rr) {
      std::vector<Rat> v = basis.vectors.row(rr);
      if (span.insert(v)) {
        out.generators.emplace_back(k, element_from_coeffs(m, k, v));
        ++added;
      }
    }
    if (added != profile.ck(k))
      throw InternalError("module_generators: degree " + std::to_string(k) + " added " +
                          std::to_string(added) + " generators, expected " +
                          std::to_string(profile.ck(k)));
    if (span.rank() != static_cast<std::size_t>(profile.dim_hk(k)))
      throw InternalError("module_generators: span misses members in degree " +
                          std::to_string(k));
    (void)expected;
  }
  return out;
}

CohomElement symplectic_form(const EmbeddedGraph& g) {
  if (!g.has_coordinates())
    throw InputError(InputError::Kind::BadInput, "symplectic form needs coordinates");
  CohomElement f;
  for (int i = 1; i <= g.vertex_count(); ++i) {
    const Point& p = g.point(i);
    f.parts.push_back(BivarPoly::monomial(1, 0, p.x) + BivarPoly::monomial(0, 1, p.y));
  }
  if (!is_member(g, f).member)
    throw InternalError("symplectic form fails membership");
  return f;
}

CohomElement power(const CohomElement& f, int e) {
  if (e < 0) throw InputError(InputError::Kind::BadInput, "power: negative exponent");
  CohomElement out;
  out.parts.assign(f.parts.size(), BivarPoly::constant(Rat(1)));
  for (int i = 0; i < e; ++i) out = componentwise_product(out, f);
  return out;
}

CohomElement componentwise_product(const CohomElement& f, const CohomElement& h) {
  if (f.parts.size() != h.parts.size())
    throw InputError(InputError::Kind::BadInput, "product: size mismatch");
  CohomElement out;
  out.parts.reserve(f.parts.size());
  for (std::size_t i = 0; i < f.parts.size(); ++i)
    out.parts.push_back(f.parts[i] * h.parts[i]);
  return out;
}

bool verify_basis(const EmbeddedGraph& g, const GeneratorSet& candidate) {
  const int m = g.vertex_count();
  const CharProfile profile = char_profile(g);

  int dmax = 0;
  for (const auto& [d, f] : candidate.generators) {
    dmax = std::max(dmax, d);
    if (static_cast<int>(f.parts.size()) != m) return false;
    bool hom = true;
    for (const BivarPoly& p : f.parts) hom = hom && p.is_homogeneous(d);
    if (!hom || !is_member(g, f).member) return false;
  }
  const std::vector<long> n = candidate.degree_counts(dmax);

  // Free generation, checked degree by degree: the monomial multiples of
  // the candidates must be independent and exhaust the member space.  The
  // bound max(dmax, K+1) is complete: matching dimension counts on that
  // range force the per-degree candidate counts to equal the c_k, and the
  // module is generated in degrees <= K+1, so spanning there implies
  // spanning everywhere.
  for (int k = 0; k <= std::max(dmax, profile.K + 1); ++k) {
    long expected = 0;
    for (int d = 0; d <= std::min(k, dmax); ++d)
      expected += static_cast<long>(k + 1 - d) * n[d];
    if (expected != profile.dim_hk(k)) return false;

    RrefAccumulator span(static_cast<std::size_t>(k + 1) * m);
    long inserted = 0;
    for (const auto& [d, gen] : candidate.generators) {
      if (d > k) continue;
      for (int b = 0; b <= k - d; ++b) {
        CohomElement shifted;
        const BivarPoly mono = BivarPoly::monomial(k - d - b, b, Rat(1));
        for (const BivarPoly& p : gen.parts) shifted.parts.push_back(mono * p);
        if (!span.insert(coeffs_from_element(m, k, shifted))) return false;  // dependent
        ++inserted;
      }
    }
    if (inserted != expected) return false;
  }
  return true;
}

CohomElement kunneth_map(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Rat& a,
                         const Rat& b, const CohomElement& u, const CohomElement& v) {
  if (static_cast<int>(u.parts.size()) != g1.vertex_count() ||
      static_cast<int>(v.parts.size()) != g2.vertex_count())
    throw InputError(InputError::Kind::BadInput, "kunneth_map: part count mismatch");
  if (!is_member(g1, u).member || !is_member(g2, v).member)
    throw InputError(InputError::Kind::BadInput, "kunneth_map: inputs must be members");

  const EmbeddedGraph prod = EmbeddedGraph::cartesian_product(g1, g2, a, b);
  const int m2 = g2.vertex_count();
  CohomElement out;
  out.parts.assign(prod.vertex_count(), BivarPoly());
  for (int i = 1; i <= g1.vertex_count(); ++i)
    for (int s = 1; s <= m2; ++s)
      out.parts[(i - 1) * m2 + (s - 1)] = u.parts[i - 1] * v.parts[s - 1];
  if (!is_member(prod, out).member)
    throw InternalError("kunneth_map: image fails membership");
  return out;
}

KunnethReport kunneth_check(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Rat& a,
                            const Rat& b) {
  const EmbeddedGraph prod = EmbeddedGraph::cartesian_product(g1, g2, a, b);
  const CharProfile p1 = char_profile(g1);
  const CharProfile p2 = char_profile(g2);
  const CharProfile p3 = char_profile(prod);

  KunnethReport rep;
  rep.c1 = p1.c;
  rep.c2 = p2.c;
  rep.c3 = p3.c;
  rep.convolution_ok = true;
  const int top = p1.K + p2.K + 4;
  for (int k = 0; k <= top; ++k) {
    long conv = 0;
    for (int j = 0; j <= k; ++j) conv += p1.ck(j) * p2.ck(k - j);
    if (conv != p3.ck(k)) rep.convolution_ok = false;
  }

  // Map a basis of each small degree through and re-check membership.
  rep.samples_member_ok = true;
  const int m1 = g1.vertex_count(), m2 = g2.vertex_count();
  for (int k1 = 0; k1 <= std::min(p1.K + 1, 2); ++k1)
    for (int k2 = 0; k2 <= std::min(p2.K + 1, 2); ++k2) {
      const DegreeBasis b1 = degree_basis(g1, k1);
      const DegreeBasis b2 = degree_basis(g2, k2);
      for (std::size_t r1 = 0; r1 < b1.vectors.rows(); ++r1)
        for (std::size_t r2 = 0; r2 < b2.vectors.rows(); ++r2) {
          const CohomElement u = element_from_coeffs(m1, k1, b1.vectors.row(r1));
          const CohomElement v = element_from_coeffs(m2, k2, b2.vectors.row(r2));
          try {
            (void)kunneth_map(g1, g2, a, b, u, v);
          } catch (const InternalError&) {
            rep.samples_member_ok = false;
          }
          ++rep.samples_checked;
        }
    }
  return rep;
}

}  // namespace gkm
