#include "gkm/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>

#include "gkm/cohomology.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/linalg.hpp"
#include "gkm/profile.hpp"
#include "gkm/structure.hpp"

namespace gkm {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::PreconditionUnmet: return "precondition_unmet";
  }
  return "?";
}

std::string VerifyReport::to_json() const {
  json j;
  j["check"] = check;
  j["instance"] = instance;
  j["relation"] = relation;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["verdict"] = verdict_name(verdict);
  if (!witness.empty()) j["witness"] = json::parse(witness);
  return j.dump();
}

namespace {

VerifyReport base_report(std::string check, std::string instance, std::string relation) {
  VerifyReport r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.relation = std::move(relation);
  return r;
}

json graph_witness(const EmbeddedGraph& g) { return json::parse(g.to_json()); }

VerifyReport unmet(VerifyReport r, const std::string& why, const EmbeddedGraph& g) {
  r.verdict = Verdict::PreconditionUnmet;
  json w;
  w["why"] = why;
  w["graph"] = graph_witness(g);
  r.witness = w.dump();
  return r;
}

void finish_eq(VerifyReport& r, long lhs, long rhs, const EmbeddedGraph& g, json params) {
  r.lhs = std::to_string(lhs);
  r.rhs = std::to_string(rhs);
  if (lhs == rhs) {
    r.verdict = Verdict::Pass;
  } else {
    r.verdict = Verdict::Fail;
    params["graph"] = graph_witness(g);
    r.witness = params.dump();
  }
}

void finish_le(VerifyReport& r, const Rat& lhs, const Rat& rhs, const EmbeddedGraph& g,
               json params) {
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  if (lhs <= rhs) {
    r.verdict = Verdict::Pass;
  } else {
    r.verdict = Verdict::Fail;
    params["graph"] = graph_witness(g);
    r.witness = params.dump();
  }
}

}  // namespace

VerifyReport check_vertex_deletion(const EmbeddedGraph& g, int t, int k,
                                   const std::string& instance) {
  VerifyReport r = base_report("vertex-deletion", instance, "s_k(G) = s_k(G - v_t)");
  if (t < 1 || t > g.vertex_count() || k < 0) return unmet(r, "need 1 <= t <= m, k >= 0", g);
  if (g.degree(t) > k + 1)
    return unmet(r, "deleted vertex has degree " + std::to_string(g.degree(t)) +
                        " > k+1 = " + std::to_string(k + 1), g);
  const long lhs = char_profile(g).sk(k);
  const long rhs = char_profile(g.delete_vertex(t)).sk(k);
  finish_eq(r, lhs, rhs, g, json{{"t", t}, {"k", k}});
  return r;
}

VerifyReport check_vertex_deletion_bound(const EmbeddedGraph& g, int t, int k,
                                         const std::string& instance) {
  VerifyReport r = base_report("vertex-deletion-bound", instance,
                               "0 <= s_k(G) - s_k(G - v_t) <= max(deg(t) - k - 1, 0)");
  if (t < 1 || t > g.vertex_count() || k < 0) return unmet(r, "need 1 <= t <= m, k >= 0", g);
  const long drop = char_profile(g).sk(k) - char_profile(g.delete_vertex(t)).sk(k);
  const long cap = std::max<long>(g.degree(t) - k - 1, 0);
  r.lhs = std::to_string(drop);
  r.rhs = "[0, " + std::to_string(cap) + "]";
  if (drop >= 0 && drop <= cap) {
    r.verdict = Verdict::Pass;
  } else {
    r.verdict = Verdict::Fail;
    json w{{"t", t}, {"k", k}, {"drop", drop}, {"cap", cap}};
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

VerifyReport check_split_additivity(const EmbeddedGraph& g, const std::vector<Edge>& f, int k,
                                    const std::string& instance) {
  VerifyReport r = base_report("split-additivity", instance, "s_k(G) = s_k(C1) + s_k(C2)");
  if (k < 0) return unmet(r, "need k >= 0", g);
  if (!g.is_connected()) return unmet(r, "graph must be connected", g);

  std::vector<Edge> cut;
  for (const Edge& e : f) {
    if (!g.has_edge(e.first, e.second)) return unmet(r, "cut contains a non-edge", g);
    cut.push_back(EmbeddedGraph::normalized(e.first, e.second));
  }
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  if (static_cast<int>(cut.size()) - 1 > k)
    return unmet(r, "need k >= |F| - 1 = " + std::to_string(cut.size() - 1), g);

  const EmbeddedGraph without = g.delete_edges(cut);
  if (without.component_count() != 2)
    return unmet(r, "cut must split the graph into exactly two components", g);
  for (std::size_t i = 0; i < cut.size(); ++i) {
    std::vector<Edge> sub = cut;
    sub.erase(sub.begin() + static_cast<long>(i));
    if (g.delete_edges(sub).component_count() != 1)
      return unmet(r, "cut is not minimal: a proper subset already disconnects", g);
  }

  const std::vector<int> comp = without.component_ids();
  std::vector<int> c1, c2;
  for (int i = 1; i <= g.vertex_count(); ++i)
    (comp[i - 1] == 0 ? c1 : c2).push_back(i);
  const long lhs = char_profile(g).sk(k);
  const long rhs =
      char_profile(without.induced(c1)).sk(k) + char_profile(without.induced(c2)).sk(k);
  json params{{"k", k}};
  params["cut"] = json::array();
  for (const Edge& e : cut) params["cut"].push_back({e.first, e.second});
  finish_eq(r, lhs, rhs, g, params);
  return r;
}

VerifyReport check_sum_rules(const EmbeddedGraph& g, const std::string& instance) {
  VerifyReport r =
      base_report("sum-rules", instance, "sum c_k = m  and  sum k*c_k = |E|");
  try {
    const CharProfile p = char_profile(g);
    long sum = 0, weighted = 0;
    for (int k = 0; k <= p.K + 1; ++k) {
      sum += p.ck(k);
      weighted += static_cast<long>(k) * p.ck(k);
    }
    r.lhs = std::to_string(sum) + ", " + std::to_string(weighted);
    r.rhs = std::to_string(p.m) + ", " + std::to_string(p.edge_cnt);
    r.verdict = (sum == p.m && weighted == p.edge_cnt) ? Verdict::Pass : Verdict::Fail;
    if (r.verdict == Verdict::Fail) {
      json w{{"profile", json::parse(p.to_json())}};
      w["graph"] = graph_witness(g);
      r.witness = w.dump();
    }
  } catch (const InternalError& e) {
    r.verdict = Verdict::Fail;
    json w{{"error", e.what()}};
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

namespace {

// Shared preamble for the regular-graph theorems; returns the valency when
// the check applies, -1 to mark the report vacuous.
int regular_connected_valency(const EmbeddedGraph& g, VerifyReport& r) {
  int d = 0;
  if (g.vertex_count() == 0 || !g.is_connected() || !g.is_regular(&d)) {
    r.verdict = Verdict::Vacuous;
    r.lhs = r.rhs = "-";
    return -1;
  }
  return d;
}

}  // namespace

VerifyReport check_edge_connectivity_theorem(const EmbeddedGraph& g,
                                             const std::string& instance) {
  VerifyReport r = base_report("edge-connectivity-theorem", instance,
                               "connected d-regular, c_d = 1  =>  d-edge-connected");
  const int d = regular_connected_valency(g, r);
  if (d < 0) return r;
  const CharProfile p = char_profile(g);
  if (p.ck(d) != 1) {
    r.verdict = Verdict::Vacuous;
    r.lhs = "c_" + std::to_string(d) + " = " + std::to_string(p.ck(d));
    r.rhs = "-";
    return r;
  }
  const bool ok = is_k_edge_connected(g, d);
  r.lhs = ok ? "d-edge-connected" : "not d-edge-connected";
  r.rhs = "d-edge-connected";
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) {
    json w{{"d", d}, {"cut", json::parse(edge_connectivity(g).to_json())}};
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

VerifyReport check_vertex_connectivity_theorem(const EmbeddedGraph& g,
                                               const std::string& instance) {
  VerifyReport r = base_report("vertex-connectivity-theorem", instance,
                               "connected d-regular, c_d = 1  =>  (ceil(d/2)+1)-vertex-connected");
  const int d = regular_connected_valency(g, r);
  if (d < 0) return r;
  const CharProfile p = char_profile(g);
  if (p.ck(d) != 1) {
    r.verdict = Verdict::Vacuous;
    r.lhs = "c_" + std::to_string(d) + " = " + std::to_string(p.ck(d));
    r.rhs = "-";
    return r;
  }
  const int need = (d + 1) / 2 + 1;
  const bool ok = is_k_vertex_connected(g, need);
  r.lhs = ok ? "sufficiently vertex-connected" : "insufficiently vertex-connected";
  r.rhs = std::to_string(need) + "-vertex-connected";
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) {
    json w{{"d", d}, {"needed", need}};
    if (g.vertex_count() >= 2) w["cut"] = json::parse(vertex_connectivity(g).to_json());
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

VerifyReport check_top_characteristic(const EmbeddedGraph& g, const std::string& instance) {
  VerifyReport r = base_report("top-characteristic", instance,
                               "connected d-regular  =>  c_d <= 1 and c_k = 0 for k > d");
  const int d = regular_connected_valency(g, r);
  if (d < 0) return r;
  const CharProfile p = char_profile(g);
  long beyond = 0;
  for (int k = d + 1; k <= p.K + 1; ++k) beyond += p.ck(k);
  r.lhs = "c_d = " + std::to_string(p.ck(d)) + ", tail sum = " + std::to_string(beyond);
  r.rhs = "c_d <= 1, tail sum = 0";
  r.verdict = (p.ck(d) <= 1 && beyond == 0) ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail) {
    json w{{"d", d}, {"profile", json::parse(p.to_json())}};
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

VerifyReport check_second_bound(const EmbeddedGraph& g, const std::string& instance) {
  VerifyReport r = base_report("second-characteristic-bound", instance,
                               "connected d-regular (d >= 2), c_d = 1  =>  c_{d-1} <= (m-2)/(d-1)");
  const int d = regular_connected_valency(g, r);
  if (d < 0) return r;
  const CharProfile p = char_profile(g);
  if (d < 2 || p.ck(d) != 1) {
    r.verdict = Verdict::Vacuous;
    r.lhs = "d = " + std::to_string(d) + ", c_d = " + std::to_string(p.ck(d));
    r.rhs = "-";
    return r;
  }
  finish_le(r, Rat(p.ck(d - 1)), Rat(p.m - 2, d - 1), g, json{{"d", d}});
  return r;
}

VerifyReport check_near_regular_bound(const EmbeddedGraph& g, int d, const std::string& instance) {
  VerifyReport r = base_report("near-regular-bound", instance,
                               "s_{d-3} <= n_d/(d-1) + pi0");
  if (d < 2) return unmet(r, "need d >= 2", g);
  if (!is_type_ad(g, d))
    return unmet(r, "graph is not near-regular of the stated degree", g);
  const CharProfile p = char_profile(g);
  const Rat lhs(p.sk(d - 3));
  const Rat rhs = Rat(count_nd(g, d), d - 1) + Rat(p.pi0);
  finish_le(r, lhs, rhs, g, json{{"d", d}});
  return r;
}

VerifyReport check_span_self_containment(const EmbeddedGraph& g, const std::vector<int>& u,
                                         int k, const std::string& instance) {
  VerifyReport r = base_report(
      "span-self-containment", instance,
      "relations vanishing outside U lie in the span of the pair vectors of U");
  if (k < 0) return unmet(r, "need k >= 0", g);
  const int m = g.vertex_count();
  std::set<int> uset(u.begin(), u.end());
  if (uset.empty() || *uset.begin() < 1 || *uset.rbegin() > m)
    return unmet(r, "U must be a nonempty subset of the vertices", g);
  if (!g.has_coordinates()) {
    for (int i : uset)
      for (int j : uset)
        if (i < j && !g.has_edge(i, j))
          return unmet(r, "pair slopes unavailable: no coordinates and U has a non-edge", g);
  }

  const RatMatrix mk = build_mk(g, k);
  const std::size_t cols = mk.cols();

  // Columns of vertices outside U, all power blocks.
  std::vector<std::size_t> out_cols;
  for (int b = 0; b <= k; ++b)
    for (int i = 1; i <= m; ++i)
      if (uset.count(i) == 0)
        out_cols.push_back(static_cast<std::size_t>(b) * m + (i - 1));

  RatMatrix restricted(mk.rows(), out_cols.size());
  for (std::size_t rr = 0; rr < mk.rows(); ++rr)
    for (std::size_t cc = 0; cc < out_cols.size(); ++cc)
      restricted.at(rr, cc) = mk.at(rr, out_cols[cc]);

  // Row combinations vanishing outside U = left kernel of the restriction.
  const RatMatrix combos = right_kernel_basis(restricted.transposed());

  // Span of the pair vectors drawn from U.
  std::vector<int> uvec(uset.begin(), uset.end());
  RrefAccumulator span(cols);
  for (std::size_t a = 0; a < uvec.size(); ++a)
    for (std::size_t b = a + 1; b < uvec.size(); ++b) {
      const Rat slope = g.pair_slope(uvec[a], uvec[b]);
      std::vector<Rat> v(cols, Rat(0));
      Rat p(1);
      for (int blk = 0; blk <= k; ++blk) {
        v[static_cast<std::size_t>(blk) * m + (uvec[a] - 1)] = p;
        v[static_cast<std::size_t>(blk) * m + (uvec[b] - 1)] = -p;
        p *= slope;
      }
      span.insert(std::move(v));
    }

  long checked = 0;
  for (std::size_t rr = 0; rr < combos.rows(); ++rr) {
    const std::vector<Rat> w = row_times_matrix(combos.row(rr), mk);
    ++checked;
    if (!span.contains(w)) {
      r.lhs = "relation outside the span";
      r.rhs = "contained";
      r.verdict = Verdict::Fail;
      json jw{{"k", k}, {"U", uvec}};
      json coeffs = json::array();
      for (const Rat& x : combos.row(rr)) coeffs.push_back(x.str());
      jw["combination"] = coeffs;
      jw["graph"] = graph_witness(g);
      r.witness = jw.dump();
      return r;
    }
  }
  r.lhs = std::to_string(checked) + " relations contained";
  r.rhs = std::to_string(checked) + " relations contained";
  r.verdict = Verdict::Pass;
  return r;
}

VerifyReport check_kunneth(const EmbeddedGraph& g1, const EmbeddedGraph& g2, const Rat& a,
                           const Rat& b, const std::string& instance) {
  VerifyReport r = base_report("kunneth", instance,
                               "product characteristic numbers are the factor convolution; "
                               "componentwise products of members are members");
  try {
    const KunnethReport kr = kunneth_check(g1, g2, a, b);
    json l{{"c3", kr.c3}};
    r.lhs = l["c3"].dump() + (kr.samples_member_ok ? ", members ok" : ", member violation");
    json conv = json::array();
    for (std::size_t k = 0; k < kr.c3.size(); ++k) {
      long v = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        const long x = j < kr.c1.size() ? kr.c1[j] : 0;
        const long y = (k - j) < kr.c2.size() ? kr.c2[k - j] : 0;
        v += x * y;
      }
      conv.push_back(v);
    }
    r.rhs = conv.dump() + ", members ok";
    r.verdict = (kr.convolution_ok && kr.samples_member_ok) ? Verdict::Pass : Verdict::Fail;
    if (r.verdict == Verdict::Fail) {
      json w{{"c1", kr.c1}, {"c2", kr.c2}, {"c3", kr.c3},
             {"a", a.str()}, {"b", b.str()},
             {"samples_checked", kr.samples_checked}};
      w["g1"] = graph_witness(g1);
      w["g2"] = graph_witness(g2);
      r.witness = w.dump();
    }
  } catch (const InputError& e) {
    r = unmet(std::move(r), std::string("product construction failed: ") + e.what(), g1);
  }
  return r;
}

VerifyReport check_omega_power_basis(const EmbeddedGraph& g, const std::string& instance) {
  VerifyReport r = base_report("symplectic-power-basis", instance,
                               "on a complete graph the powers 1, w, ..., w^{m-1} generate freely");
  if (!g.has_coordinates() || !g.is_complete() || g.vertex_count() == 0) {
    r.verdict = Verdict::Vacuous;
    r.lhs = r.rhs = "-";
    return r;
  }
  const CohomElement w = symplectic_form(g);
  GeneratorSet cand;
  for (int i = 0; i < g.vertex_count(); ++i) cand.generators.emplace_back(i, power(w, i));
  const bool ok = verify_basis(g, cand);
  r.lhs = ok ? "free basis" : "not a free basis";
  r.rhs = "free basis";
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) {
    json jw;
    jw["graph"] = graph_witness(g);
    r.witness = jw.dump();
  }
  return r;
}

VerifyReport check_trim_preserves_s(const EmbeddedGraph& g, int k, const std::string& instance) {
  VerifyReport r = base_report("trim-invariants", instance,
                               "trimming is idempotent, order-independent, and keeps s_{k-1}");
  if (k < 1) return unmet(r, "need k >= 1", g);
  const TrimResult low = trim(g, k, TrimOrder::LowestFirst);
  const TrimResult high = trim(g, k, TrimOrder::HighestFirst);

  json w{{"k", k}};
  const bool same = low.kept == high.kept && low.kept_edges == high.kept_edges;
  const TrimResult again = trim(low.graph, k, TrimOrder::LowestFirst);
  bool idem = static_cast<int>(again.kept.size()) == low.graph.vertex_count() &&
              again.kept_edges.size() == low.graph.edge_count();
  const long s_before = char_profile(g).sk(k - 1);
  const long s_after = char_profile(low.graph).sk(k - 1);

  r.lhs = "s = " + std::to_string(s_after) + (same ? ", same result" : ", order-dependent") +
          (idem ? ", idempotent" : ", not idempotent");
  r.rhs = "s = " + std::to_string(s_before) + ", same result, idempotent";
  r.verdict = (same && idem && s_before == s_after) ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail) {
    w["kept_low"] = low.kept;
    w["kept_high"] = high.kept;
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

VerifyReport check_index_domination_report(const EmbeddedGraph& g, const std::string& instance) {
  VerifyReport r = base_report("index-domination", instance,
                               "sum (k+1-i) c_i <= sum (k+1-i) b_i for every k");
  try {
    const DominationReport rep = check_index_domination(g);
    r.lhs = std::to_string(rep.rows.size()) + " rows dominated";
    r.rhs = r.lhs;
    r.verdict = Verdict::Pass;
  } catch (const InternalError& e) {
    r.verdict = Verdict::Fail;
    r.lhs = "violation";
    r.rhs = "domination";
    json w{{"error", e.what()}};
    w["graph"] = graph_witness(g);
    r.witness = w.dump();
  }
  return r;
}

namespace {

std::vector<VerifyReport> instance_battery(const std::string& name, const EmbeddedGraph& g) {
  std::vector<VerifyReport> out;
  out.push_back(check_sum_rules(g, name));
  out.push_back(check_index_domination_report(g, name));

  const int m = g.vertex_count();
  if (m >= 1) {
    int tmin = 1, tmax = 1;
    for (int i = 2; i <= m; ++i) {
      if (g.degree(i) < g.degree(tmin)) tmin = i;
      if (g.degree(i) > g.degree(tmax)) tmax = i;
    }
    out.push_back(check_vertex_deletion(g, tmin, std::max(0, g.degree(tmin) - 1), name));
    out.push_back(check_vertex_deletion_bound(g, tmax, std::max(0, g.degree(tmax) - 2), name));
  }

  if (m >= 2 && g.is_connected()) {
    const EdgeCut cut = edge_connectivity(g);
    out.push_back(
        check_split_additivity(g, cut.edges, static_cast<int>(cut.edges.size()) - 1, name));
  }

  out.push_back(check_edge_connectivity_theorem(g, name));
  out.push_back(check_vertex_connectivity_theorem(g, name));
  out.push_back(check_top_characteristic(g, name));
  out.push_back(check_second_bound(g, name));

  {
    // Near-regular degree candidates compatible with the degree profile.
    bool emitted = false;
    const int dmax = g.max_degree();
    for (int d : {dmax, dmax + 1}) {
      if (d >= 2 && is_type_ad(g, d)) {
        out.push_back(check_near_regular_bound(g, d, name));
        emitted = true;
        break;
      }
    }
    if (!emitted) {
      VerifyReport r = base_report("near-regular-bound", name, "s_{d-3} <= n_d/(d-1) + pi0");
      r.verdict = Verdict::Vacuous;
      r.lhs = r.rhs = "-";
      out.push_back(r);
    }
  }

  if (g.has_coordinates()) {
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i + 1;
    out.push_back(check_span_self_containment(g, all, 1, name));
    std::vector<int> half(all.begin(), all.begin() + (m + 1) / 2);
    if (!half.empty()) {
      out.push_back(check_span_self_containment(g, half, 1, name));
      if (m <= 6) out.push_back(check_span_self_containment(g, half, 2, name));
    }
  } else if (g.edge_count() > 0) {
    const Edge e = g.edges().front();
    out.push_back(check_span_self_containment(g, {e.first, e.second}, 1, name));
  }

  out.push_back(check_trim_preserves_s(g, 1, name));
  if (g.max_degree() >= 3) out.push_back(check_trim_preserves_s(g, 2, name));

  if (g.has_coordinates() && g.is_complete() && m <= 5)
    out.push_back(check_omega_power_basis(g, name));
  return out;
}

}  // namespace

std::vector<VerifyReport> run_suite(const SuiteSpec& spec) {
  using Job = std::function<std::vector<VerifyReport>()>;
  std::vector<Job> jobs;

  if (spec.fixtures) {
    for (const auto& fx : fixtures::standard_corpus()) {
      const std::string name = fx.name;
      const EmbeddedGraph g = fx.graph;
      jobs.push_back([name, g]() { return instance_battery(name, g); });
    }
    jobs.push_back([]() {
      return std::vector<VerifyReport>{
          check_kunneth(EmbeddedGraph::single_edge(1), EmbeddedGraph::single_edge(3), Rat(1),
                        Rat(1), "edge-x-edge"),
          check_kunneth(EmbeddedGraph::single_edge(1), EmbeddedGraph::complete(3, 3), Rat(1),
                        Rat(1), "edge-x-triangle")};
    });
  }

  for (int i = 0; i < spec.random_instances; ++i) {
    const std::uint64_t seed = spec.seed * 1000003ULL + static_cast<std::uint64_t>(i);
    RandomGraphSpec rs;
    const int span = std::max(1, spec.random_max_m - 3);
    rs.m = 4 + static_cast<int>(i % span);
    switch (i % 4) {
      case 0: rs.density = Rat(1, 3); break;
      case 1: rs.density = Rat(1, 2); break;
      case 2: rs.density = Rat(2, 3); break;
      case 3:
        rs.mode = RandomGraphSpec::EdgeMode::Regular;
        rs.degree = rs.m > 4 ? 4 : 2;
        if ((rs.m * rs.degree) % 2 != 0) rs.degree -= 1;
        break;
    }
    const std::string name = "random-" + std::to_string(i) + "-m" + std::to_string(rs.m);
    jobs.push_back([rs, seed, name]() {
      return instance_battery(name, EmbeddedGraph::random_general_position(rs, seed));
    });
  }

  // A few random product pairs (none when no random instances were asked for).
  const int pairs = spec.random_instances == 0 ? 0 : std::max(2, spec.random_instances / 6);
  for (int i = 0; i < pairs; ++i) {
    const std::uint64_t seed = spec.seed * 7000003ULL + static_cast<std::uint64_t>(i);
    jobs.push_back([seed, i]() {
      RandomGraphSpec rs;
      rs.m = 2 + static_cast<int>(i % 3);
      rs.density = Rat(2, 3);
      const EmbeddedGraph f1 = EmbeddedGraph::random_general_position(rs, seed);
      rs.m = 2 + static_cast<int>((i + 1) % 3);
      const EmbeddedGraph f2 = EmbeddedGraph::random_general_position(rs, seed + 1);
      const auto prod = EmbeddedGraph::cartesian_product_auto(f1, f2);
      return std::vector<VerifyReport>{
          check_kunneth(f1, f2, prod.a, prod.b, "random-pair-" + std::to_string(i))};
    });
  }

  std::vector<std::vector<VerifyReport>> slots(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
    try {
      slots[i] = jobs[i]();
    } catch (const std::exception& e) {
      VerifyReport r = base_report("suite-internal", "job-" + std::to_string(i),
                                   "checks execute without unexpected exceptions");
      r.verdict = Verdict::Fail;
      r.lhs = e.what();
      r.rhs = "no exception";
      json w{{"error", e.what()}};
      r.witness = w.dump();
      slots[i] = {r};
    }
  }

  std::vector<VerifyReport> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

int suite_exit_code(const std::vector<VerifyReport>& reports) {
  bool unmet_seen = false;
  for (const VerifyReport& r : reports) {
    if (r.verdict == Verdict::Fail) return 1;
    if (r.verdict == Verdict::PreconditionUnmet) unmet_seen = true;
  }
  return unmet_seen ? 2 : 0;
}

}  // namespace gkm
