#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/embedded_graph.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

// Rank/corank/characteristic-number profile of the relation matrices M_k.
//
// M_k has one row per edge (lexicographic order) and (k+1)*m columns; the
// row of edge ij places +a_ij^b at column b*m + (i-1) and -a_ij^b at
// b*m + (j-1) for b = 0..k.   r_k = rank M_k,  s_k = |E| - r_k.
//
// Index conventions inside the stored arrays:
//   r[k]     = r_k   for 0 <= k <= K
//   s[k+1]   = s_k   for -1 <= k <= K     (s.front() = s_{-1} = |E|)
//   c[k]     = c_k   for 0 <= k <= K+1
// where K = max(0, max degree - 1) is the vanishing cutoff: r_k = |E| and
// s_k = 0 for every k >= K, and c_k = 0 for every k > K+1.
struct CharProfile {
  int m = 0;
  long edge_cnt = 0;
  int K = 0;
  long pi0 = 0;  // number of connected components = c_0
  std::vector<long> r, s, c;

  long rk(int k) const;      // any k >= -1
  long sk(int k) const;      // any k >= -1
  long ck(int k) const;      // any k >= 0
  long dim_hk(int k) const;  // (k+1)*m - r_k
  std::string to_json() const;
};

// Relation vector of one edge in degree k, laid out as described above.
std::vector<Rat> edge_vector(const EmbeddedGraph& g, const Edge& e, int k);
RatMatrix build_mk(const EmbeddedGraph& g, int k);

// Computes the full profile.  c_0 = pi0 = m - r_0 and
// c_k = 2 r_{k-1} - r_k - r_{k-2}; nonnegativity, sum(c_k) = m and
// sum(k c_k) = |E| are re-derived and enforced (InternalError on violation).
CharProfile char_profile(const EmbeddedGraph& g);

// Dimension of the degree-k piece of the solution module, (k+1)*m - r_k.
long dim_hk(const EmbeddedGraph& g, int k);

struct BettiData {
  std::vector<long> sigma;       // per-vertex count of neighbors lower in direction xi
  std::vector<long> beta;        // beta[k] = #{v : sigma(v) = k}, size max degree + 1
  std::pair<Rat, Rat> xi;        // direction used
  bool regular = false;          // when true, beta is direction independent
};

// Counts by downward degree in a generic direction.  Picks xi = (1, N) with
// the smallest N >= 1 that separates all vertices when none is supplied;
// a supplied xi with ties is rejected (NonGenericDirection).
BettiData betti_generic(const EmbeddedGraph& g,
                        std::optional<std::pair<Rat, Rat>> xi = std::nullopt);

struct OrderingData {
  std::vector<long> mu;  // mu[p]: edges from position p+1 to later positions
  std::vector<long> b;   // b[k] = #{p : mu_p = k}, size max degree + 1
};

// Purely combinatorial ordering counts; `ordering` is a permutation of
// 1..m listing the vertices by position (identity when empty).
OrderingData ordering_indices(const EmbeddedGraph& g, const std::vector<int>& ordering = {});

struct DominationRow {
  int k = 0;
  long lhs = 0, rhs = 0;
  bool ok = false;
};
struct DominationReport {
  std::vector<DominationRow> rows;
  bool all_ok = true;
};

// For every k up to K+1, the weighted sums satisfy
//   sum_i (k+1-i) c_i  <=  sum_i (k+1-i) b_i .
// A violation cannot happen for correct arithmetic, so it throws
// InternalError; the report carries both sides per k.
DominationReport check_index_domination(const EmbeddedGraph& g,
                                        const std::vector<int>& ordering = {});

}  // namespace gkm
