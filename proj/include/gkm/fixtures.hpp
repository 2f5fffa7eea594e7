#pragma once

#include <string>
#include <vector>

#include "gkm/embedded_graph.hpp"

namespace gkm {
namespace fixtures {

// 4 vertices, 5 edges (complete minus one): the smallest graph whose
// profile has a repeated rank plateau.  Placed at (0,0), (3,1), (4,-1),
// (2,-2); slopes -3, 1, 1/2, -1/3, -2.
EmbeddedGraph diamond();

// The same combinatorics with the slopes given directly (no coordinates).
EmbeddedGraph diamond_slopes();

// Two triangles joined by one bridge edge: 6 vertices, 7 edges.
EmbeddedGraph two_triangles_bridge();

// Complete graph on 4 vertices minus one edge, on the standard curve.
EmbeddedGraph k4_minus_edge();

struct Named {
  std::string name;
  EmbeddedGraph graph;
};

// The standard corpus: the fixtures above, complete graphs to m = 6,
// cycles to m = 8, and two small cartesian products.
std::vector<Named> standard_corpus();

}  // namespace fixtures
}  // namespace gkm
