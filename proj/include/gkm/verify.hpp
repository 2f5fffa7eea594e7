#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkm/embedded_graph.hpp"

namespace gkm {

enum class Verdict { Pass, Fail, Vacuous, PreconditionUnmet };

std::string verdict_name(Verdict v);

// One executed check of one stated relation on one instance.  A Fail
// verdict carries a witness with enough data (instance, parameters,
// offending values) to reproduce the computation standalone.
struct VerifyReport {
  std::string check;
  std::string instance;
  std::string relation;
  std::string lhs, rhs;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // JSON text; empty unless fail/precondition-unmet

  bool failed() const { return verdict == Verdict::Fail; }
  std::string to_json() const;
};

// Corank is stable under deleting a vertex of degree <= k+1:
//   s_k(G) = s_k(G - v_t).
VerifyReport check_vertex_deletion(const EmbeddedGraph& g, int t, int k,
                                   const std::string& instance);

// For any vertex: 0 <= s_k(G) - s_k(G - v_t) <= max(deg(v_t) - k - 1, 0).
VerifyReport check_vertex_deletion_bound(const EmbeddedGraph& g, int t, int k,
                                         const std::string& instance);

// For a minimal edge cut F splitting a connected graph into two components
// C1, C2 and k >= |F| - 1:  s_k(G) = s_k(C1) + s_k(C2).
VerifyReport check_split_additivity(const EmbeddedGraph& g, const std::vector<Edge>& f, int k,
                                    const std::string& instance);

// sum c_k = m and sum k*c_k = |E| (plus the internal profile cross-checks).
VerifyReport check_sum_rules(const EmbeddedGraph& g, const std::string& instance);

// Connected d-regular with c_d = 1 is d-edge-connected.
VerifyReport check_edge_connectivity_theorem(const EmbeddedGraph& g, const std::string& instance);

// Connected d-regular with c_d = 1 is (ceil(d/2) + 1)-vertex-connected.
VerifyReport check_vertex_connectivity_theorem(const EmbeddedGraph& g,
                                               const std::string& instance);

// Connected d-regular: c_k = 0 past degree d and c_d <= 1.
VerifyReport check_top_characteristic(const EmbeddedGraph& g, const std::string& instance);

// Connected d-regular (d >= 2) with c_d = 1:  c_{d-1} <= (m-2)/(d-1).
VerifyReport check_second_bound(const EmbeddedGraph& g, const std::string& instance);

// Degrees in {d-1, d}, components (d-1)-edge-connected, each owning a
// degree-(d-1) vertex:  s_{d-3} <= n_d/(d-1) + pi0.
VerifyReport check_near_regular_bound(const EmbeddedGraph& g, int d, const std::string& instance);

// Any relation among the edge vectors that vanishes outside the vertex set
// U lies in the span of the pair vectors drawn from U alone.
VerifyReport check_span_self_containment(const EmbeddedGraph& g, const std::vector<int>& u,
                                         int k, const std::string& instance);

// Characteristic numbers of a cartesian product are the convolution of the
// factors'; componentwise products of members are members.
VerifyReport check_kunneth(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Rat& a,
                           const Rat& b, const std::string& instance);

// On a complete graph the powers of the symplectic form generate freely.
VerifyReport check_omega_power_basis(const EmbeddedGraph& g, const std::string& instance);

// Trimming at level k is idempotent, independent of iteration order, and
// preserves s_{k-1}.
VerifyReport check_trim_preserves_s(const EmbeddedGraph& g, int k, const std::string& instance);

// Weighted partial sums of c are dominated by those of the ordering counts b.
VerifyReport check_index_domination_report(const EmbeddedGraph& g, const std::string& instance);

struct SuiteSpec {
  bool fixtures = true;
  int random_instances = 24;
  int random_max_m = 8;
  std::uint64_t seed = 1;
};

// The full battery over the standard corpus plus seeded random instances.
// Instances run concurrently; the report order is fixed regardless.
std::vector<VerifyReport> run_suite(const SuiteSpec& spec);

// 0: all pass/vacuous.  1: any fail.  2: precondition problems only.
int suite_exit_code(const std::vector<VerifyReport>& reports);

}  // namespace gkm
