#pragma once

// Brute-force reference computations shared by the test binaries.  These
// deliberately avoid the library's elimination pipeline: rank comes from
// minor determinants, connectivity from subset enumeration, and solution
// dimensions from assembling the divisibility constraints by literal
// polynomial substitution plus a plain dense Gaussian elimination written
// here.  Keep everything exponential-but-tiny; callers stay below m = 6.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gkm/bivar_poly.hpp"
#include "gkm/embedded_graph.hpp"
#include "gkm/matrix.hpp"
#include "gkm/rational.hpp"

namespace oracles {

using gkm::BivarPoly;
using gkm::Edge;
using gkm::EmbeddedGraph;
using gkm::Rat;
using gkm::RatMatrix;

// All r-element subsets of {0, ..., n-1}, lexicographic.
inline std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Determinant by Laplace expansion along the first row.
inline Rat det_laplace(const std::vector<std::vector<Rat>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rat(1);
  if (n == 1) return a[0][0];
  Rat det(0);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (!a[0][c].is_zero()) {
      std::vector<std::vector<Rat>> minor(n - 1, std::vector<Rat>(n - 1));
      for (std::size_t r = 1; r < n; ++r) {
        std::size_t cc = 0;
        for (std::size_t col = 0; col < n; ++col) {
          if (col == c) continue;
          minor[r - 1][cc++] = a[r][col];
        }
      }
      Rat term = a[0][c] * det_laplace(minor);
      det = (sign > 0) ? det + term : det - term;
    }
    sign = -sign;
  }
  return det;
}

// Rank as the size of the largest square submatrix with nonzero
// determinant.  Exponential; for small matrices only.
inline std::size_t rank_by_minors(const RatMatrix& m) {
  const int nr = static_cast<int>(m.rows());
  const int nc = static_cast<int>(m.cols());
  for (int r = std::min(nr, nc); r >= 1; --r) {
    for (const auto& rows : combinations(nr, r)) {
      for (const auto& cols : combinations(nc, r)) {
        std::vector<std::vector<Rat>> sub(r, std::vector<Rat>(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) sub[i][j] = m.at(rows[i], cols[j]);
        if (!det_laplace(sub).is_zero()) return static_cast<std::size_t>(r);
      }
    }
  }
  return 0;
}

// Plain rational Gaussian elimination, self-contained (no library calls).
inline std::size_t rank_gauss_local(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  const std::size_t nr = a.size(), nc = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && a[piv][col].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t r = rank + 1; r < nr; ++r) {
      if (a[r][col].is_zero()) continue;
      Rat f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < nc; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the space of tuples (f_1, ..., f_m) of homogeneous degree-k
// polynomials with (y - a_ij*x) dividing f_i - f_j on every edge.  Each
// divisibility is imposed by substituting y = a_ij*x into the generic
// difference monomial by monomial and requiring every coefficient of the
// result to vanish.  The unknown layout (vertex-major) intentionally
// differs from the library's degree-major layout.
inline long dim_solutions_by_substitution(const EmbeddedGraph& g, int k) {
  const int m = g.vertex_count();
  const int cols = (k + 1) * m;
  auto col = [&](int vertex, int b) { return (vertex - 1) * (k + 1) + b; };
  std::vector<std::vector<Rat>> rows;
  for (const Edge& e : g.edges()) {
    const Rat a = g.slope(e);
    std::map<BivarPoly::Exponents, std::vector<Rat>> by_exponent;
    for (int b = 0; b <= k; ++b) {
      const BivarPoly substituted = BivarPoly::monomial(k - b, b, Rat(1)).substitute_y(a);
      for (const auto& [exps, coef] : substituted.terms()) {
        auto& row = by_exponent[exps];
        if (row.empty()) row.assign(cols, Rat());
        row[col(e.first, b)] += coef;
        row[col(e.second, b)] -= coef;
      }
    }
    for (auto& [exps, row] : by_exponent) rows.push_back(std::move(row));
  }
  return cols - static_cast<long>(rank_gauss_local(std::move(rows)));
}

// Minimum crossing-edge count over all vertex bipartitions: equals the
// global minimum edge cut size.  0 when already disconnected.
inline long edge_conn_brute(const EmbeddedGraph& g) {
  const int m = g.vertex_count();
  long best = -1;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    long crossing = 0;
    for (const Edge& e : g.edges()) {
      const bool a = (mask >> (e.first - 1)) & 1u;
      const bool b = (mask >> (e.second - 1)) & 1u;
      if (a != b) ++crossing;
    }
    if (best < 0 || crossing < best) best = crossing;
  }
  return best;
}

// Minimum number of vertices whose removal disconnects the rest; m-1 when
// no such set exists (complete graphs).
inline long vertex_conn_brute(const EmbeddedGraph& g) {
  const int m = g.vertex_count();
  for (int size = 0; size <= m - 2; ++size) {
    for (const auto& removed : combinations(m, size)) {
      std::vector<bool> gone(m + 1, false);
      for (int r : removed) gone[r + 1] = true;
      std::vector<int> keep;
      for (int v = 1; v <= m; ++v)
        if (!gone[v]) keep.push_back(v);
      if (keep.size() >= 2 && !g.induced(keep).is_connected()) return size;
    }
  }
  return m - 1;
}

}  // namespace oracles
