#include "gkm/fixtures.hpp"

namespace gkm {
namespace fixtures {

EmbeddedGraph diamond() {
  std::vector<Point> phi{
      {Rat(0), Rat(0)}, {Rat(3), Rat(1)}, {Rat(4), Rat(-1)}, {Rat(2), Rat(-2)}};
  std::vector<Edge> edges{{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return EmbeddedGraph::from_points(std::move(phi), std::move(edges));
}

EmbeddedGraph diamond_slopes() {
  std::vector<Edge> edges{{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::map<Edge, Rat> slopes{{{1, 2}, Rat(-3)},
                             {{1, 4}, Rat(1)},
                             {{2, 3}, Rat(1, 2)},
                             {{2, 4}, Rat(-1, 3)},
                             {{3, 4}, Rat(-2)}};
  return EmbeddedGraph::from_slopes(4, std::move(edges), slopes);
}

EmbeddedGraph two_triangles_bridge() {
  std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}};
  std::vector<Point> phi;
  for (long t = 1; t <= 6; ++t) phi.push_back({Rat(t), Rat(t) * Rat(t)});
  return EmbeddedGraph::from_points(std::move(phi), std::move(edges));
}

EmbeddedGraph k4_minus_edge() {
  return EmbeddedGraph::complete(4).delete_edges({{1, 2}});
}

std::vector<Named> standard_corpus() {
  std::vector<Named> out;
  out.push_back({"diamond", diamond()});
  out.push_back({"diamond-slopes", diamond_slopes()});
  for (int m = 2; m <= 6; ++m)
    out.push_back({"complete-" + std::to_string(m), EmbeddedGraph::complete(m)});
  for (int m = 3; m <= 8; ++m)
    out.push_back({"cycle-" + std::to_string(m), EmbeddedGraph::cycle(m)});
  out.push_back({"edge-x-edge",
                 EmbeddedGraph::cartesian_product(EmbeddedGraph::single_edge(1),
                                                  EmbeddedGraph::single_edge(3), Rat(1), Rat(1))});
  out.push_back({"edge-x-triangle",
                 EmbeddedGraph::cartesian_product(EmbeddedGraph::single_edge(1),
                                                  EmbeddedGraph::complete(3, 3), Rat(1), Rat(1))});
  out.push_back({"two-triangles-bridge", two_triangles_bridge()});
  out.push_back({"k4-minus-edge", k4_minus_edge()});
  return out;
}

}  // namespace fixtures
}  // namespace gkm
