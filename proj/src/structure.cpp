#include "gkm/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gkm {

using nlohmann::json;

namespace {

// Small deterministic max-flow (Edmonds-Karp) on an explicit arc list.
struct FlowNet {
  struct Arc {
    int to;
    long cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowNet(int n) : adj(n) {}

  void add_edge(int u, int v, long cap_uv, long cap_vu) {
    adj[u].push_back({v, cap_uv, adj[v].size()});
    adj[v].push_back({u, cap_vu, adj[u].size() - 1});
  }

  long max_flow(int s, int t) {
    long flow = 0;
    while (true) {
      std::vector<std::pair<int, std::size_t>> parent(adj.size(), {-1, 0});
      std::deque<int> q{s};
      parent[s] = {s, 0};
      while (!q.empty() && parent[t].first == -1) {
        int v = q.front();
        q.pop_front();
        for (std::size_t i = 0; i < adj[v].size(); ++i) {
          const Arc& a = adj[v][i];
          if (a.cap > 0 && parent[a.to].first == -1) {
            parent[a.to] = {v, i};
            q.push_back(a.to);
          }
        }
      }
      if (parent[t].first == -1) return flow;
      long aug = -1;
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        aug = aug < 0 ? adj[u][i].cap : std::min(aug, adj[u][i].cap);
        v = u;
      }
      for (int v = t; v != s;) {
        auto [u, i] = parent[v];
        adj[u][i].cap -= aug;
        adj[adj[u][i].to][adj[u][i].rev].cap += aug;
        v = u;
      }
      flow += aug;
    }
  }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj.size(), false);
    std::deque<int> q{s};
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const Arc& a : adj[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          q.push_back(a.to);
        }
    }
    return seen;
  }
};

// A subgraph given by explicit (original-label) vertices and edges.
struct SubGraph {
  std::vector<int> verts;   // ascending
  std::vector<Edge> edges;  // sorted, endpoints drawn from verts
};

std::vector<std::vector<int>> subgraph_components(const SubGraph& sg) {
  std::map<int, std::vector<int>> adj;
  for (int v : sg.verts) adj[v];
  for (const Edge& e : sg.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<int> left(sg.verts.begin(), sg.verts.end());
  std::vector<std::vector<int>> comps;
  while (!left.empty()) {
    int start = *left.begin();
    std::vector<int> comp;
    std::deque<int> q{start};
    left.erase(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int w : adj[v])
        if (left.erase(w) != 0) q.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct MinCut {
  long size = 0;            // -1 when the subgraph has < 2 vertices
  std::vector<Edge> edges;
  std::vector<int> side1, side2;
};

// Global minimum edge cut of a connected subgraph: fix s, scan all t.
MinCut min_edge_cut_connected(const SubGraph& sg) {
  MinCut best;
  best.size = -1;
  const int n = static_cast<int>(sg.verts.size());
  if (n < 2) return best;
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[sg.verts[i]] = i;

  int best_t = -1;
  for (int t = 1; t < n; ++t) {
    FlowNet net(n);
    for (const Edge& e : sg.edges) net.add_edge(idx[e.first], idx[e.second], 1, 1);
    long f = net.max_flow(0, t);
    if (best.size < 0 || f < best.size) {
      best.size = f;
      best_t = t;
    }
  }

  FlowNet net(n);
  for (const Edge& e : sg.edges) net.add_edge(idx[e.first], idx[e.second], 1, 1);
  net.max_flow(0, best_t);
  const std::vector<bool> reach = net.residual_reachable(0);
  for (const Edge& e : sg.edges)
    if (reach[idx[e.first]] != reach[idx[e.second]]) best.edges.push_back(e);
  for (int v : sg.verts) (reach[idx[v]] ? best.side1 : best.side2).push_back(v);
  std::sort(best.edges.begin(), best.edges.end());
  return best;
}

SubGraph whole_graph(const EmbeddedGraph& g) {
  SubGraph sg;
  for (int i = 1; i <= g.vertex_count(); ++i) sg.verts.push_back(i);
  sg.edges = g.edges();
  return sg;
}

}  // namespace

std::string EdgeCut::to_json() const {
  json j;
  j["size"] = size;
  json es = json::array();
  for (const Edge& e : edges) es.push_back({e.first, e.second});
  j["edges"] = es;
  j["sides"] = {side1, side2};
  return j.dump();
}

std::string VertexCut::to_json() const {
  json j;
  j["size"] = size;
  j["vertices"] = vertices;
  j["sides"] = {side1, side2};
  return j.dump();
}

EdgeCut edge_connectivity(const EmbeddedGraph& g) {
  if (g.vertex_count() < 2)
    throw InputError(InputError::Kind::BadInput, "edge_connectivity: need m >= 2");
  EdgeCut out;
  const std::vector<int> comp = g.component_ids();
  if (g.component_count() > 1) {
    for (int i = 1; i <= g.vertex_count(); ++i)
      (comp[i - 1] == 0 ? out.side1 : out.side2).push_back(i);
    return out;  // size 0, empty cut
  }
  MinCut mc = min_edge_cut_connected(whole_graph(g));
  out.size = mc.size;
  out.edges = std::move(mc.edges);
  out.side1 = std::move(mc.side1);
  out.side2 = std::move(mc.side2);
  return out;
}

bool is_k_edge_connected(const EmbeddedGraph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() < 2) return g.vertex_count() == 1;  // single vertex: connected forever
  return edge_connectivity(g).size >= k;
}

VertexCut vertex_connectivity(const EmbeddedGraph& g) {
  const int m = g.vertex_count();
  if (m < 2) throw InputError(InputError::Kind::BadInput, "vertex_connectivity: need m >= 2");
  VertexCut out;
  if (g.is_complete()) {
    out.size = m - 1;
    return out;
  }

  // Menger: the connectivity of a non-complete graph is the minimum over
  // non-adjacent pairs of the vertex-capacity max-flow.  Split each vertex
  // v into v_in = 2v, v_out = 2v+1 with a unit arc.
  const long INF = static_cast<long>(m) * m + 1;
  long best = -1;
  std::pair<int, int> best_pair{-1, -1};
  for (int s = 1; s <= m; ++s)
    for (int t = s + 1; t <= m; ++t) {
      if (g.has_edge(s, t)) continue;
      FlowNet net(2 * (m + 1));
      for (int v = 1; v <= m; ++v) net.add_edge(2 * v, 2 * v + 1, v == s || v == t ? INF : 1, 0);
      for (const Edge& e : g.edges()) {
        net.add_edge(2 * e.first + 1, 2 * e.second, INF, 0);
        net.add_edge(2 * e.second + 1, 2 * e.first, INF, 0);
      }
      const long f = net.max_flow(2 * s + 1, 2 * t);
      if (best < 0 || f < best) {
        best = f;
        best_pair = {s, t};
      }
    }

  FlowNet net(2 * (m + 1));
  auto [s, t] = best_pair;
  for (int v = 1; v <= m; ++v) net.add_edge(2 * v, 2 * v + 1, v == s || v == t ? INF : 1, 0);
  for (const Edge& e : g.edges()) {
    net.add_edge(2 * e.first + 1, 2 * e.second, INF, 0);
    net.add_edge(2 * e.second + 1, 2 * e.first, INF, 0);
  }
  net.max_flow(2 * s + 1, 2 * t);
  const std::vector<bool> reach = net.residual_reachable(2 * s + 1);
  out.size = best;
  for (int v = 1; v <= m; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) out.vertices.push_back(v);

  // Components of the graph with the cut removed: side1 holds s.
  std::vector<int> keep;
  for (int v = 1; v <= m; ++v)
    if (!std::binary_search(out.vertices.begin(), out.vertices.end(), v)) keep.push_back(v);
  SubGraph rest;
  rest.verts = keep;
  for (const Edge& e : g.edges())
    if (std::binary_search(keep.begin(), keep.end(), e.first) &&
        std::binary_search(keep.begin(), keep.end(), e.second))
      rest.edges.push_back(e);
  for (const std::vector<int>& comp : subgraph_components(rest)) {
    if (std::binary_search(comp.begin(), comp.end(), s))
      out.side1 = comp;
    else
      out.side2.insert(out.side2.end(), comp.begin(), comp.end());
  }
  std::sort(out.side2.begin(), out.side2.end());
  return out;
}

bool is_k_vertex_connected(const EmbeddedGraph& g, int k) {
  if (k <= 0) return true;
  if (g.vertex_count() < 2) return g.vertex_count() == 1;
  if (g.is_complete()) return true;  // vertex removal never disconnects it
  return vertex_connectivity(g).size >= k;
}

TrimResult trim(const EmbeddedGraph& g, int k, TrimOrder order) {
  if (k < 1) throw InputError(InputError::Kind::BadInput, "trim: need k >= 1");

  std::vector<int> verts;
  for (int i = 1; i <= g.vertex_count(); ++i) verts.push_back(i);
  std::vector<Edge> edges = g.edges();

  const bool low_first = order == TrimOrder::LowestFirst;
  while (true) {
    // Pass 1: shed low-degree vertices.
    std::map<int, int> deg;
    for (int v : verts) deg[v] = 0;
    for (const Edge& e : edges) {
      ++deg[e.first];
      ++deg[e.second];
    }
    int victim = 0;
    for (int v : verts)
      if (deg[v] <= k) {
        victim = v;
        if (low_first) break;
      }
    if (victim != 0) {
      verts.erase(std::find(verts.begin(), verts.end(), victim));
      std::erase_if(edges, [victim](const Edge& e) {
        return e.first == victim || e.second == victim;
      });
      continue;
    }

    // Pass 2: split a component held together by at most k edges.
    SubGraph sg{verts, edges};
    std::vector<std::vector<int>> comps = subgraph_components(sg);
    if (!low_first) std::reverse(comps.begin(), comps.end());
    bool cut_made = false;
    for (const std::vector<int>& comp : comps) {
      if (comp.size() < 2) continue;
      SubGraph csg;
      csg.verts = comp;
      for (const Edge& e : edges)
        if (std::binary_search(comp.begin(), comp.end(), e.first) &&
            std::binary_search(comp.begin(), comp.end(), e.second))
          csg.edges.push_back(e);
      MinCut mc = min_edge_cut_connected(csg);
      if (mc.size >= 1 && mc.size <= k) {
        std::set<Edge> drop(mc.edges.begin(), mc.edges.end());
        std::erase_if(edges, [&drop](const Edge& e) { return drop.count(e) > 0; });
        cut_made = true;
        break;
      }
    }
    if (cut_made) continue;
    break;  // every vertex has degree >= k+1, every component is (k+1)-edge-connected
  }

  TrimResult out;
  out.kept = verts;
  out.kept_edges = edges;
  out.graph = g.induced(verts);
  // g.induced keeps all surviving-endpoint edges; drop the ones cut in pass 2.
  std::set<Edge> keep_set(edges.begin(), edges.end());
  std::vector<Edge> to_delete;
  std::map<int, int> old_to_new;
  for (std::size_t i = 0; i < verts.size(); ++i) old_to_new[verts[i]] = static_cast<int>(i) + 1;
  for (const Edge& e : g.edges()) {
    if (old_to_new.count(e.first) == 0 || old_to_new.count(e.second) == 0) continue;
    if (keep_set.count(e) == 0)
      to_delete.push_back({old_to_new[e.first], old_to_new[e.second]});
  }
  if (!to_delete.empty()) out.graph = out.graph.delete_edges(to_delete);
  return out;
}

long count_nd(const EmbeddedGraph& g, int d) {
  long n = 0;
  for (int i = 1; i <= g.vertex_count(); ++i)
    if (g.degree(i) == d) ++n;
  return n;
}

bool is_type_ad(const EmbeddedGraph& g, int d) {
  if (d < 2) throw InputError(InputError::Kind::BadInput, "is_type_ad: need d >= 2");
  if (g.vertex_count() == 0) return false;
  for (int i = 1; i <= g.vertex_count(); ++i) {
    const int deg = g.degree(i);
    if (deg != d && deg != d - 1) return false;
  }
  const std::vector<int> comp_id = g.component_ids();
  const int n_comp = g.component_count();
  for (int c = 0; c < n_comp; ++c) {
    std::vector<int> comp;
    for (int i = 1; i <= g.vertex_count(); ++i)
      if (comp_id[i - 1] == c) comp.push_back(i);
    bool has_low = false;
    for (int v : comp)
      if (g.degree(v) == d - 1) has_low = true;
    if (!has_low) return false;
    if (comp.size() >= 2) {
      SubGraph csg;
      csg.verts = comp;
      for (const Edge& e : g.edges())
        if (comp_id[e.first - 1] == c) csg.edges.push_back(e);
      MinCut mc = min_edge_cut_connected(csg);
      if (mc.size < d - 1) return false;
    }
  }
  return true;
}

}  // namespace gkm
