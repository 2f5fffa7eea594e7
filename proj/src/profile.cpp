#include "gkm/profile.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "gkm/linalg.hpp"

namespace gkm {

using nlohmann::json;

long CharProfile::rk(int k) const {
  if (k < 0) return 0;
  if (k <= K) return r[k];
  return edge_cnt;
}

long CharProfile::sk(int k) const {
  if (k < -1) throw InputError(InputError::Kind::BadInput, "sk: k < -1");
  if (k <= K) return s[k + 1];
  return 0;
}

long CharProfile::ck(int k) const {
  if (k < 0) throw InputError(InputError::Kind::BadInput, "ck: k < 0");
  if (k <= K + 1) return c[k];
  return 0;
}

long CharProfile::dim_hk(int k) const {
  if (k < 0) throw InputError(InputError::Kind::BadInput, "dim_hk: k < 0");
  return static_cast<long>(k + 1) * m - rk(k);
}

std::string CharProfile::to_json() const {
  json j;
  j["r"] = r;
  // The stored array starts at k = -1; serialize from k = 0 so that r, s
  // and c line up by degree.
  j["s"] = std::vector<long>(s.begin() + 1, s.end());
  j["c"] = c;
  j["pi0"] = pi0;
  j["K"] = K;
  return j.dump();
}

std::vector<Rat> edge_vector(const EmbeddedGraph& g, const Edge& e, int k) {
  if (k < 0) throw InputError(InputError::Kind::BadInput, "edge_vector: k < 0");
  const int m = g.vertex_count();
  std::vector<Rat> v(static_cast<std::size_t>(k + 1) * m, Rat(0));
  const Rat a = g.slope(e);
  Rat p(1);
  for (int b = 0; b <= k; ++b) {
    v[static_cast<std::size_t>(b) * m + (e.first - 1)] = p;
    v[static_cast<std::size_t>(b) * m + (e.second - 1)] = -p;
    p *= a;
  }
  return v;
}

RatMatrix build_mk(const EmbeddedGraph& g, int k) {
  if (k < 0) throw InputError(InputError::Kind::BadInput, "build_mk: k < 0");
  const int m = g.vertex_count();
  RatMatrix mk(g.edge_count(), static_cast<std::size_t>(k + 1) * m);
  std::size_t row = 0;
  for (const Edge& e : g.edges()) mk.set_row(row++, edge_vector(g, e, k));
  return mk;
}

CharProfile char_profile(const EmbeddedGraph& g) {
  CharProfile p;
  p.m = g.vertex_count();
  p.edge_cnt = static_cast<long>(g.edge_count());
  p.K = std::max(0, g.max_degree() - 1);
  p.pi0 = g.component_count();

  p.r.assign(p.K + 1, 0);
  if (p.edge_cnt > 0) {
    // Independent degrees; safe to compute concurrently.
    const int kk = p.K;
#pragma omp parallel for schedule(dynamic) if (kk >= 1)
    for (int k = 0; k <= kk; ++k)
      p.r[k] = static_cast<long>(rank(build_mk(g, k)));
  }

  p.s.assign(p.K + 2, 0);
  for (int k = -1; k <= p.K; ++k) p.s[k + 1] = p.edge_cnt - p.rk(k);

  if (p.pi0 != p.m - p.rk(0))
    throw InternalError("component count disagrees with rank of M_0");
  if (p.sk(p.K) != 0)
    throw InternalError("relations persist past the vanishing cutoff");
  for (int k = 0; k < p.K; ++k)
    if (p.r[k] > p.rk(k + 1)) throw InternalError("rank profile not monotone");

  p.c.assign(p.K + 2, 0);
  p.c[0] = p.pi0;
  for (int k = 1; k <= p.K + 1; ++k) p.c[k] = 2 * p.rk(k - 1) - p.rk(k) - p.rk(k - 2);

  long sum_c = 0, weighted = 0;
  for (int k = 0; k <= p.K + 1; ++k) {
    if (p.c[k] < 0) throw InternalError("negative characteristic number");
    sum_c += p.c[k];
    weighted += static_cast<long>(k) * p.c[k];
  }
  if (sum_c != p.m) throw InternalError("characteristic numbers do not sum to m");
  if (weighted != p.edge_cnt)
    throw InternalError("weighted characteristic numbers do not sum to |E|");
  return p;
}

long dim_hk(const EmbeddedGraph& g, int k) {
  if (k < 0) throw InputError(InputError::Kind::BadInput, "dim_hk: k < 0");
  const int kk = std::max(0, g.max_degree() - 1);
  const long r = k <= kk ? static_cast<long>(rank(build_mk(g, k)))
                         : static_cast<long>(g.edge_count());
  return static_cast<long>(k + 1) * g.vertex_count() - r;
}

BettiData betti_generic(const EmbeddedGraph& g, std::optional<std::pair<Rat, Rat>> xi) {
  if (!g.has_coordinates())
    throw InputError(InputError::Kind::BadInput, "betti: coordinates required");
  const int m = g.vertex_count();

  auto heights = [&](const std::pair<Rat, Rat>& dir) {
    std::vector<Rat> h;
    h.reserve(m);
    for (int i = 1; i <= m; ++i) {
      const Point& p = g.point(i);
      h.push_back(p.x * dir.first + p.y * dir.second);
    }
    return h;
  };
  auto distinct = [](const std::vector<Rat>& h) {
    std::set<Rat> seen(h.begin(), h.end());
    return seen.size() == h.size();
  };

  BettiData out;
  std::vector<Rat> h;
  if (xi.has_value()) {
    h = heights(*xi);
    if (!distinct(h))
      throw InputError(InputError::Kind::NonGenericDirection,
                       "direction has two vertices at the same height");
    out.xi = *xi;
  } else {
    // Second coordinates are pairwise distinct, so (1, N) separates all
    // vertices for all but finitely many N.
    bool found = false;
    for (long n = 1; n <= 4L * m * m + 4 && !found; ++n) {
      std::pair<Rat, Rat> dir{Rat(1), Rat(n)};
      h = heights(dir);
      if (distinct(h)) {
        out.xi = dir;
        found = true;
      }
    }
    if (!found) throw InternalError("no separating direction found");
  }

  out.sigma.assign(m, 0);
  for (int i = 1; i <= m; ++i)
    for (int j : g.neighbors(i))
      if (h[j - 1] < h[i - 1]) ++out.sigma[i - 1];

  out.beta.assign(g.max_degree() + 1, 0);
  for (long s : out.sigma) ++out.beta[s];
  out.regular = g.is_regular();
  return out;
}

OrderingData ordering_indices(const EmbeddedGraph& g, const std::vector<int>& ordering) {
  const int m = g.vertex_count();
  std::vector<int> order = ordering;
  if (order.empty()) {
    order.resize(m);
    for (int i = 0; i < m; ++i) order[i] = i + 1;
  }
  if (static_cast<int>(order.size()) != m)
    throw InputError(InputError::Kind::BadInput, "ordering: wrong length");
  std::vector<bool> seen(m + 1, false);
  for (int v : order) {
    if (v < 1 || v > m || seen[v])
      throw InputError(InputError::Kind::BadInput, "ordering: not a permutation of 1..m");
    seen[v] = true;
  }

  OrderingData out;
  out.mu.assign(m, 0);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (g.has_edge(order[p], order[q])) ++out.mu[p];

  out.b.assign(g.max_degree() + 1, 0);
  for (long v : out.mu) ++out.b[v];
  return out;
}

DominationReport check_index_domination(const EmbeddedGraph& g,
                                        const std::vector<int>& ordering) {
  const CharProfile p = char_profile(g);
  const OrderingData o = ordering_indices(g, ordering);

  DominationReport rep;
  const int kmax = std::max(p.K + 1, static_cast<int>(o.b.size()) - 1);
  for (int k = 0; k <= kmax; ++k) {
    DominationRow row;
    row.k = k;
    for (int i = 0; i <= k; ++i) {
      row.lhs += static_cast<long>(k + 1 - i) * p.ck(i);
      if (i < static_cast<int>(o.b.size())) row.rhs += static_cast<long>(k + 1 - i) * o.b[i];
    }
    row.ok = row.lhs <= row.rhs;
    rep.rows.push_back(row);
    if (!row.ok) rep.all_ok = false;
  }
  if (!rep.all_ok)
    throw InternalError("ordering counts fail to dominate characteristic numbers");
  return rep;
}

}  // namespace gkm
