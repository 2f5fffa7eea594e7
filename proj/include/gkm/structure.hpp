#pragma once

#include <string>
#include <vector>

#include "gkm/embedded_graph.hpp"

namespace gkm {

struct EdgeCut {
  long size = 0;
  std::vector<Edge> edges;           // empty when already disconnected
  std::vector<int> side1, side2;     // vertex sets after removing the cut
  std::string to_json() const;
};

struct VertexCut {
  long size = 0;
  std::vector<int> vertices;         // empty for complete graphs
  std::vector<int> side1, side2;
  std::string to_json() const;
};

// Minimum edge cut (max-flow based, deterministic tie-breaking).  Requires
// m >= 2; a disconnected graph reports 0 with one component against the
// rest.
EdgeCut edge_connectivity(const EmbeddedGraph& g);

// No set of fewer than k edges disconnects the graph.
bool is_k_edge_connected(const EmbeddedGraph& g, int k);

// Minimum vertex cut.  Complete graphs cannot be disconnected by vertex
// removal; they report m-1 with an empty cut.  Requires m >= 2.
VertexCut vertex_connectivity(const EmbeddedGraph& g);

// No set of fewer than k vertices disconnects the graph.  Every complete
// graph satisfies this for all k (vertex removal never disconnects it).
bool is_k_vertex_connected(const EmbeddedGraph& g, int k);

enum class TrimOrder { LowestFirst, HighestFirst };

struct TrimResult {
  EmbeddedGraph graph;
  std::vector<int> kept;        // original vertex ids, ascending
  std::vector<Edge> kept_edges; // surviving edges in original labels
};

// Repeatedly (1) deletes a vertex of degree <= k, else (2) removes a
// minimum edge cut of size <= k from some component, until every vertex
// has degree >= k+1 and every component is (k+1)-edge-connected.  The
// `order` parameter picks which qualifying vertex/component is handled
// first; the final corank s_{k-1} does not depend on it.
TrimResult trim(const EmbeddedGraph& g, int k, TrimOrder order = TrimOrder::LowestFirst);

// Degrees all d or d-1, each component (d-1)-edge-connected and containing
// at least one vertex of degree d-1.  Requires d >= 2.
bool is_type_ad(const EmbeddedGraph& g, int d);

// Number of vertices of degree exactly d.
long count_nd(const EmbeddedGraph& g, int d);

}  // namespace gkm
