// Acceptance gate: one line per criterion, exact comparisons throughout.
// Exit code = number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/embedded_graph.hpp"
#include "gkm/errors.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/profile.hpp"
#include "gkm/structure.hpp"
#include "gkm/verify.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void fail(Outcome& o, const std::string& why) {
  o.ok = false;
  if (!o.note.empty()) o.note += "; ";
  o.note += why;
}

EmbeddedGraph random_er(int m, std::uint64_t seed, const Rat& density) {
  RandomGraphSpec spec;
  spec.m = m;
  spec.density = density;
  return EmbeddedGraph::random_general_position(spec, seed);
}

EmbeddedGraph random_connected(int m, std::uint64_t seed, const Rat& density) {
  for (std::uint64_t s = seed;; s += 1000003) {
    const EmbeddedGraph g = random_er(m, s, density);
    if (g.is_connected()) return g;
  }
}

// ---------------------------------------------------------------------------

Outcome criterion_1() {  // smallest rank-plateau instance, both input flavors
  Outcome o;
  for (const EmbeddedGraph& g : {fixtures::diamond(), fixtures::diamond_slopes()}) {
    const CharProfile p = char_profile(g);
    if (p.r != std::vector<long>{3, 5, 5}) fail(o, "r != (3,5,5)");
    if (p.sk(0) != 2 || p.sk(1) != 0 || p.sk(2) != 0) fail(o, "s != (2,0,0)");
    if (p.ck(0) != 1 || p.ck(1) != 1 || p.ck(2) != 2 || p.ck(3) != 0) fail(o, "c != (1,1,2)");
  }
  return o;
}

Outcome criterion_2() {  // complete graphs: all-ones profile, power basis
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    const CharProfile p = char_profile(EmbeddedGraph::complete(m));
    for (int k = 0; k < m; ++k)
      if (p.ck(k) != 1) fail(o, "c_" + std::to_string(k) + " != 1 at m=" + std::to_string(m));
    if (p.ck(m) != 0) fail(o, "c_m != 0 at m=" + std::to_string(m));
  }
  for (int m = 2; m <= 5; ++m) {
    const EmbeddedGraph g = EmbeddedGraph::complete(m);
    const CohomElement omega = symplectic_form(g);
    GeneratorSet candidate;
    for (int e = 0; e < m; ++e) candidate.generators.push_back({e, power(omega, e)});
    if (!verify_basis(g, candidate)) fail(o, "power basis rejected at m=" + std::to_string(m));
  }
  return o;
}

Outcome criterion_3() {  // cycles: profile and downward counts
  Outcome o;
  for (int m = 3; m <= 8; ++m) {
    const EmbeddedGraph g = EmbeddedGraph::cycle(m);
    const CharProfile p = char_profile(g);
    if (p.ck(0) != 1 || p.ck(1) != m - 2 || p.ck(2) != 1 || p.ck(3) != 0)
      fail(o, "c != (1,m-2,1) at m=" + std::to_string(m));
    if (betti_generic(g).beta != std::vector<long>{1, m - 2, 1})
      fail(o, "beta != (1,m-2,1) at m=" + std::to_string(m));
  }
  return o;
}

Outcome criterion_4() {  // sum rules everywhere
  Outcome o;
  for (const auto& [name, g] : fixtures::standard_corpus())
    if (check_sum_rules(g, name).verdict != Verdict::Pass) fail(o, "fixture " + name);
  int count = 0;
  const Rat densities[] = {Rat(1, 3), Rat(1, 2), Rat(2, 3)};
  for (int i = 0; i < 102; ++i) {
    const int m = 3 + (i % 8);  // 3..10
    const EmbeddedGraph g = random_er(m, 424242 + 31ULL * i, densities[i % 3]);
    if (check_sum_rules(g, "random").verdict != Verdict::Pass)
      fail(o, "random instance " + std::to_string(i));
    ++count;
  }
  o.note = std::to_string(count) + " random instances";
  return o;
}

Outcome criterion_5() {  // vertex deletion and split additivity
  Outcome o;
  int strict = 0, bounded = 0;
  for (int i = 0; i < 30; ++i) {
    const int m = 4 + (i % 5);
    const EmbeddedGraph g = random_er(m, 905000 + 17ULL * i, Rat(1, 2));
    for (int t = 1; t <= m; ++t) {
      const int deg = g.degree(t);
      if (deg >= 1) {
        // Tight case of the strict equality: degree = k + 1.
        if (check_vertex_deletion(g, t, deg - 1, "random").verdict != Verdict::Pass)
          fail(o, "strict deletion failed");
        ++strict;
      }
      if (t % 2 == 1) {
        for (int k = 0; k <= 2; ++k) {
          if (check_vertex_deletion_bound(g, t, k, "random").verdict != Verdict::Pass)
            fail(o, "deletion bound failed");
          ++bounded;
        }
      }
    }
  }
  if (strict < 100 || bounded < 100) fail(o, "fewer than 100 triples");

  if (check_split_additivity(fixtures::two_triangles_bridge(), {{3, 4}}, 0, "bridge").verdict !=
      Verdict::Pass)
    fail(o, "bridge split");
  int splits = 0;
  for (int i = 0; i < 20; ++i) {
    const int m = 4 + (i % 4);
    const EmbeddedGraph g = random_connected(m, 777000 + 13ULL * i, Rat(1, 2));
    const EdgeCut cut = edge_connectivity(g);  // a minimum cut is minimal
    const int k = static_cast<int>(cut.size) - 1;
    if (check_split_additivity(g, cut.edges, k, "random").verdict != Verdict::Pass)
      fail(o, "random split " + std::to_string(i));
    ++splits;
  }
  o.note = std::to_string(strict) + " strict + " + std::to_string(bounded) + " bounded triples, " +
           std::to_string(splits) + " random splits";
  return o;
}

Outcome criterion_6() {  // product convolution and mapped members
  Outcome o;
  const KunnethReport r22 =
      kunneth_check(EmbeddedGraph::single_edge(1), EmbeddedGraph::single_edge(3), Rat(1), Rat(1));
  if (!r22.convolution_ok || r22.c3 != std::vector<long>{1, 2, 1}) fail(o, "edge x edge != (1,2,1)");
  if (!r22.samples_member_ok || r22.samples_checked < 1) fail(o, "edge x edge samples");
  const KunnethReport r23 =
      kunneth_check(EmbeddedGraph::single_edge(1), EmbeddedGraph::complete(3, 3), Rat(1), Rat(1));
  if (!r23.convolution_ok || r23.c3 != std::vector<long>{1, 2, 2, 1})
    fail(o, "edge x triangle != (1,2,2,1)");
  if (!r23.samples_member_ok) fail(o, "edge x triangle samples");

  int products = 0;
  for (std::uint64_t i = 0; products < 20 && i < 200; ++i) {
    RandomGraphSpec rs;
    rs.m = 2 + static_cast<int>(i % 2);
    rs.density = Rat(3, 4);
    const EmbeddedGraph f1 = random_er(rs.m, 330000 + 7ULL * i, Rat(3, 4));
    const EmbeddedGraph f2 = random_er(2 + static_cast<int>((i + 1) % 3), 660000 + 11ULL * i, Rat(3, 4));
    GraphProduct p;
    try {
      p = EmbeddedGraph::cartesian_product_auto(f1, f2);
    } catch (const InputError&) {
      continue;  // the factors share an edge direction; next pair
    }
    const KunnethReport r = kunneth_check(f1, f2, p.a, p.b);
    if (!r.convolution_ok) fail(o, "convolution failed at pair " + std::to_string(i));
    if (r.samples_checked > 0 && !r.samples_member_ok)
      fail(o, "mapped member failed at pair " + std::to_string(i));
    ++products;
  }
  if (products < 20) fail(o, "fewer than 20 random products");
  o.note = std::to_string(products) + " random products";
  return o;
}

Outcome criterion_7() {  // connectivity theorems, zero violations
  Outcome o;
  int qualifying = 0;
  auto check_one = [&](const EmbeddedGraph& g, const std::string& name) {
    int d = 0;
    if (!g.is_connected() || !g.is_regular(&d)) return;
    if (char_profile(g).ck(d) != 1) return;
    const VerifyReport e = check_edge_connectivity_theorem(g, name);
    const VerifyReport v = check_vertex_connectivity_theorem(g, name);
    if (e.verdict != Verdict::Pass) fail(o, "edge connectivity: " + name);
    if (v.verdict != Verdict::Pass) fail(o, "vertex connectivity: " + name);
    ++qualifying;
  };
  for (const auto& [name, g] : fixtures::standard_corpus()) check_one(g, name);
  int randoms = 0;
  for (std::uint64_t i = 0; randoms < 12 && i < 400; ++i) {
    RandomGraphSpec rs;
    rs.mode = RandomGraphSpec::EdgeMode::Regular;
    rs.degree = 2 + static_cast<int>(i % 3);
    rs.m = 4 + static_cast<int>(i % 5);
    if ((rs.m * rs.degree) % 2 != 0) continue;
    if (rs.degree >= rs.m) continue;
    EmbeddedGraph g;
    try {
      g = EmbeddedGraph::random_general_position(rs, 550000 + 19ULL * i);
    } catch (const InputError&) {
      continue;
    }
    int d = 0;
    if (!g.is_connected() || !g.is_regular(&d) || char_profile(g).ck(d) != 1) continue;
    const int before = qualifying;
    check_one(g, "random-regular");
    if (qualifying > before) ++randoms;
  }
  if (qualifying < 15) fail(o, "too few qualifying instances");
  o.note = std::to_string(qualifying) + " qualifying instances (" + std::to_string(randoms) +
           " random)";
  return o;
}

Outcome criterion_8() {  // top-degree bound and the near-regular bound
  Outcome o;
  // Bound on every qualifying fixture/random instance; cycles realize
  // equality.
  auto bound_one = [&](const EmbeddedGraph& g, const std::string& name) -> VerifyReport {
    const VerifyReport r = check_second_bound(g, name);
    if (r.verdict == Verdict::Fail) fail(o, "bound violated: " + name);
    return r;
  };
  for (const auto& [name, g] : fixtures::standard_corpus()) bound_one(g, name);
  for (int m = 3; m <= 8; ++m) {
    const VerifyReport r = bound_one(EmbeddedGraph::cycle(m), "cycle");
    if (r.verdict != Verdict::Pass || r.lhs != r.rhs)
      fail(o, "cycle equality missed at m=" + std::to_string(m));
  }
  for (std::uint64_t i = 0; i < 40; ++i) {
    RandomGraphSpec rs;
    rs.mode = RandomGraphSpec::EdgeMode::Regular;
    rs.degree = 3 + static_cast<int>(i % 2);
    rs.m = 5 + static_cast<int>(i % 4);
    if ((rs.m * rs.degree) % 2 != 0 || rs.degree >= rs.m) continue;
    try {
      bound_one(EmbeddedGraph::random_general_position(rs, 880000 + 23ULL * i), "random-regular");
    } catch (const InputError&) {
      continue;
    }
  }

  // Near-regular corank bound on mixed-degree instances.
  int near = 0;
  const VerifyReport k4e = check_near_regular_bound(fixtures::k4_minus_edge(), 3, "k4-minus-edge");
  if (k4e.verdict != Verdict::Pass) fail(o, "near-regular bound on k4-minus-edge");
  if (k4e.lhs != "2" || k4e.rhs != "2") fail(o, "k4-minus-edge equality (s_0 = 2 = bound) missed");
  ++near;
  for (int m = 3; m <= 8; ++m) {  // cycles have type (d-1, d) = (2, 3)
    if (check_near_regular_bound(EmbeddedGraph::cycle(m), 3, "cycle").verdict != Verdict::Pass)
      fail(o, "cycle near-regular bound at m=" + std::to_string(m));
    ++near;
  }
  if (check_near_regular_bound(EmbeddedGraph::complete(4), 4, "K4").verdict != Verdict::Pass)
    fail(o, "K4 near-regular bound");
  ++near;
  for (std::uint64_t i = 0; near < 20 && i < 400; ++i) {
    // Delete one vertex of a random regular instance: degrees drop into
    // {d-1, d}; keep the ones that still meet the type conditions.
    RandomGraphSpec rs;
    rs.mode = RandomGraphSpec::EdgeMode::Regular;
    rs.degree = 3 + static_cast<int>(i % 2);
    rs.m = 6 + static_cast<int>(i % 3);
    if ((rs.m * rs.degree) % 2 != 0 || rs.degree >= rs.m) continue;
    EmbeddedGraph g;
    try {
      g = EmbeddedGraph::random_general_position(rs, 990000 + 29ULL * i).delete_vertex(1);
    } catch (const InputError&) {
      continue;
    }
    const int d = rs.degree;
    if (!is_type_ad(g, d)) continue;
    if (check_near_regular_bound(g, d, "random near-regular").verdict != Verdict::Pass)
      fail(o, "random near-regular bound at " + std::to_string(i));
    ++near;
  }
  if (near < 20) fail(o, "fewer than 20 near-regular instances");
  o.note = std::to_string(near) + " near-regular instances";
  return o;
}

Outcome criterion_9() {  // trimming invariants
  Outcome o;
  int instances = 0;
  std::vector<EmbeddedGraph> pool{fixtures::two_triangles_bridge(), fixtures::diamond(),
                                  EmbeddedGraph::path(5), EmbeddedGraph::complete(4)};
  for (std::uint64_t i = 0; i < 18; ++i)
    pool.push_back(random_er(4 + static_cast<int>(i % 5), 660000 + 37ULL * i, Rat(1, 2)));
  for (const EmbeddedGraph& g : pool) {
    for (int k : {1, 2}) {
      const TrimResult low = trim(g, k, TrimOrder::LowestFirst);
      const TrimResult high = trim(g, k, TrimOrder::HighestFirst);
      if (low.kept != high.kept || low.kept_edges != high.kept_edges) {
        fail(o, "order dependence at k=" + std::to_string(k));
        continue;
      }
      if (!low.kept.empty()) {
        const TrimResult again = trim(low.graph, k, TrimOrder::LowestFirst);
        if (again.kept.size() != static_cast<std::size_t>(low.graph.vertex_count()) ||
            again.kept_edges.size() != low.graph.edge_count())
          fail(o, "not idempotent at k=" + std::to_string(k));
      }
      const long before = char_profile(g).sk(k - 1);
      const long after = low.kept.empty() ? 0 : char_profile(low.graph).sk(k - 1);
      if (before != after) fail(o, "corank changed at k=" + std::to_string(k));
    }
    ++instances;
  }
  o.note = std::to_string(instances) + " instances, k in {1,2}";
  return o;
}

Outcome criterion_10() {  // rank pipeline vs direct substitution, exhaustively
  Outcome o;
  long graphs = 0, comparisons = 0;
  for (int m = 1; m <= 5; ++m) {
    std::vector<Point> phi;
    for (long t = 1; t <= m; ++t) phi.push_back({Rat(t), Rat(t * t)});
    std::vector<Edge> all_pairs;
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) all_pairs.push_back({i, j});
    const std::size_t n = all_pairs.size();
    for (std::size_t mask = 0; mask < (1ULL << n); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1ULL << b)) edges.push_back(all_pairs[b]);
      const EmbeddedGraph g = EmbeddedGraph::from_points(phi, edges);
      ++graphs;
      for (int k = 0; k <= 3; ++k) {
        if (dim_hk(g, k) != oracles::dim_solutions_by_substitution(g, k)) {
          fail(o, "mismatch at m=" + std::to_string(m) + " mask=" + std::to_string(mask) +
                      " k=" + std::to_string(k));
          return o;
        }
        ++comparisons;
      }
    }
  }
  o.note = std::to_string(graphs) + " graphs, " + std::to_string(comparisons) + " comparisons";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double limit_s;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rank plateau fixture: r=(3,5,5), s=(2,0,0), c=(1,1,2) in both flavors", 1.0,
       criterion_1},
      {2, "complete graphs m=2..6: unit characteristic numbers; power basis to m=5", 30.0,
       criterion_2},
      {3, "cycles m=3..8: c = beta = (1, m-2, 1)", 5.0, criterion_3},
      {4, "sum rules on all fixtures and 100+ random instances", 300.0, criterion_4},
      {5, "vertex deletion equality/bound and minimal-split additivity", 0, criterion_5},
      {6, "product convolution identity and mapped members", 0, criterion_6},
      {7, "edge/vertex connectivity theorems, zero violations", 0, criterion_7},
      {8, "top-degree bound (cycle equality) and near-regular corank bound", 0, criterion_8},
      {9, "trim idempotence, order independence, corank preservation", 0, criterion_9},
      {10, "exhaustive m<=5, k<=3: rank dimensions equal substitution counts", 0, criterion_10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && elapsed >= c.limit_s) {
      o.ok = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!o.ok) ++failures;
    std::printf("[%s] criterion %2d: %s%s%s (%.2fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.label,
                o.note.empty() ? "" : " -- ", o.note.c_str(), elapsed);
    std::fflush(stdout);
  }
  return failures;
}
