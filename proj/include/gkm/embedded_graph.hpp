#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/rational.hpp"

namespace gkm {

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// 1-based endpoints, always first < second.
using Edge = std::pair<int, int>;

struct RandomGraphSpec {
  enum class EdgeMode { ErdosRenyi, Regular };
  int m = 6;
  EdgeMode mode = EdgeMode::ErdosRenyi;
  Rat density = Rat(1, 2);  // edge probability in ErdosRenyi mode
  int degree = 3;           // Regular mode
  long coord_range = 0;     // 0: scale with m
};

// A finite simple graph with vertices embedded in the plane.  Valid
// instances satisfy: no two vertices coincide, no three are collinear, and
// all second coordinates are pairwise distinct (arranged by shearing when
// needed).  Each edge ij carries the slope data a_ij = -(x_j-x_i)/(y_j-y_i),
// well defined by the distinct second coordinates.
//
// A second flavor carries edge slopes only ("slope fixture").  Geometric
// realizability of such data is NOT checked; operations that need actual
// coordinates reject these instances.
class EmbeddedGraph;

// Result of a product construction, carrying the weights that worked.
struct GraphProduct;

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;  // the empty graph (m = 0)

  // Validates and normalizes; applies a shear when second coordinates
  // collide and records the parameter used.
  static EmbeddedGraph from_points(std::vector<Point> phi, std::vector<Edge> edges);

  // Slope fixture.  Enforces only the consequence of general position that
  // the slopes at each vertex are pairwise distinct.
  static EmbeddedGraph from_slopes(int m, std::vector<Edge> edges,
                                   const std::map<Edge, Rat>& slopes);

  // Standard generators; vertices sit on the curve (t, t^2) at consecutive
  // integers t = t0, ..., t0+m-1, which is always in general position.
  static EmbeddedGraph complete(int m, long t0 = 1);
  static EmbeddedGraph cycle(int m, long t0 = 1);   // m >= 3
  static EmbeddedGraph path(int m, long t0 = 1);
  static EmbeddedGraph single_edge(long t0 = 1);

  // Vertex set V1 x V2, vertex (i,s) -> (i-1)*m2 + s, edges between pairs
  // agreeing in one factor and adjacent in the other; placement
  // a*phi1 + b*phi2 with a, b nonzero.  No shear is applied: a placement
  // collision or collinearity reports an error so the caller can retry with
  // a different (a, b) -- shearing here would break the slope inheritance
  // from the factors.
  static EmbeddedGraph cartesian_product(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                                         const Rat& a, const Rat& b);

  // cartesian_product with a deterministic search over small (a, b).
  static GraphProduct cartesian_product_auto(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

  // Integer coordinates, rejection sampled into general position; identical
  // output for identical (spec, seed).
  static EmbeddedGraph random_general_position(const RandomGraphSpec& spec, std::uint64_t seed);

  int vertex_count() const { return m_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  bool has_coordinates() const { return coordinates_; }
  const Point& point(int i) const;       // 1-based
  const Rat& shear_applied() const { return shear_t_; }

  const Rat& slope(const Edge& e) const;
  const Rat& slope(int i, int j) const { return slope(normalized(i, j)); }
  // Slope for an arbitrary vertex pair, edge or not (needs coordinates
  // unless the pair is an edge).
  Rat pair_slope(int i, int j) const;

  int degree(int i) const;
  int max_degree() const;
  std::vector<int> neighbors(int i) const;  // ascending

  std::vector<int> component_ids() const;   // size m, ids 0.. in discovery order from vertex 1
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }
  bool is_regular(int* degree_out = nullptr) const;
  bool is_complete() const;

  // Same vertices, phi composed with (x, y) -> (x, y + t x).  All second
  // coordinates must come out distinct.
  EmbeddedGraph sheared(const Rat& t) const;

  // Remove vertex t and its incident edges; vertices above t shift down.
  EmbeddedGraph delete_vertex(int t) const;
  EmbeddedGraph delete_edges(const std::vector<Edge>& f) const;
  // Induced subgraph on `keep` (ascending original ids), relabeled 1..|keep|.
  EmbeddedGraph induced(const std::vector<int>& keep) const;

  std::string to_json() const;
  static EmbeddedGraph from_json(const std::string& text, bool allow_unchecked_slopes = false);

  static Edge normalized(int i, int j);

 private:
  int m_ = 0;
  std::vector<Edge> edges_;   // sorted lexicographically
  std::vector<Point> phi_;    // empty for slope fixtures
  std::map<Edge, Rat> slopes_;
  Rat shear_t_;
  bool coordinates_ = false;

  void check_edges() const;
  void compute_slopes();
  static EmbeddedGraph on_moment_curve(int m, long t0, std::vector<Edge> edges);
  static EmbeddedGraph build(std::vector<Point> phi, std::vector<Edge> edges, bool allow_shear);
};

struct GraphProduct {
  EmbeddedGraph graph;
  Rat a, b;
};

}  // namespace gkm
