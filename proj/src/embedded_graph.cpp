#include "gkm/embedded_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace gkm {

using nlohmann::json;

namespace {

// Uniform integer in [0, n) via rejection; std::uniform_int_distribution is
// not pinned down by the standard, this is, so seeded runs are reproducible
// across toolchains.
std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n == 0 ? 0 : UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

long uniform_long(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(uniform_u64(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Rat cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::string edge_key(const Edge& e) {
  return std::to_string(e.first) + "-" + std::to_string(e.second);
}

}  // namespace

Edge EmbeddedGraph::normalized(int i, int j) {
  return i < j ? Edge{i, j} : Edge{j, i};
}

void EmbeddedGraph::check_edges() const {
  std::set<Edge> seen;
  for (const Edge& e : edges_) {
    if (e.first < 1 || e.second > m_ || e.first >= e.second)
      throw InputError(InputError::Kind::BadEdge,
                       "bad edge " + edge_key(e) + " on " + std::to_string(m_) + " vertices");
    if (!seen.insert(e).second)
      throw InputError(InputError::Kind::BadEdge, "duplicate edge " + edge_key(e));
  }
}

void EmbeddedGraph::compute_slopes() {
  slopes_.clear();
  for (const Edge& e : edges_) {
    const Point& pi = phi_[e.first - 1];
    const Point& pj = phi_[e.second - 1];
    slopes_.emplace(e, -(pj.x - pi.x) / (pj.y - pi.y));
  }
}

static void sort_edges(std::vector<Edge>& edges) {
  for (Edge& e : edges) e = EmbeddedGraph::normalized(e.first, e.second);
  std::sort(edges.begin(), edges.end());
}

EmbeddedGraph EmbeddedGraph::from_points(std::vector<Point> phi, std::vector<Edge> edges) {
  return build(std::move(phi), std::move(edges), true);
}

EmbeddedGraph EmbeddedGraph::build(std::vector<Point> phi, std::vector<Edge> edges,
                                   bool allow_shear) {
  if (phi.empty())
    throw InputError(InputError::Kind::BadInput, "at least one vertex required");
  const int m = static_cast<int>(phi.size());

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (phi[i] == phi[j])
        throw InputError(InputError::Kind::DuplicatePoint,
                         "vertices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                             " share a point");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        if (cross(phi[i], phi[j], phi[k]).is_zero())
          throw InputError(InputError::Kind::CollinearTriple,
                           "vertices " + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                               ", " + std::to_string(k + 1) + " are collinear");

  // Find a shear (x, y) -> (x, y + t x) making second coordinates distinct.
  // Such t exists because only finitely many values collide any given pair.
  auto distinct_seconds = [&](const Rat& t) {
    std::set<Rat> seen;
    for (const Point& p : phi)
      if (!seen.insert(p.y + t * p.x).second) return false;
    return true;
  };
  Rat t(0);
  if (!distinct_seconds(t)) {
    if (!allow_shear)
      throw InputError(InputError::Kind::BadShear,
                       "second coordinates collide and shearing is disabled here");
    bool found = false;
    for (long d = 1; d <= 4 * static_cast<long>(m) * m + 4; ++d) {
      t = Rat(1, d);
      if (distinct_seconds(t)) {
        found = true;
        break;
      }
    }
    if (!found)
      throw InputError(InputError::Kind::BadShear, "no shear parameter found");
    for (Point& p : phi) p.y += t * p.x;
  }

  EmbeddedGraph g;
  g.m_ = m;
  g.phi_ = std::move(phi);
  g.coordinates_ = true;
  g.shear_t_ = t;
  g.edges_ = std::move(edges);
  sort_edges(g.edges_);
  g.check_edges();
  g.compute_slopes();
  return g;
}

EmbeddedGraph EmbeddedGraph::from_slopes(int m, std::vector<Edge> edges,
                                         const std::map<Edge, Rat>& slopes) {
  if (m < 1) throw InputError(InputError::Kind::BadInput, "at least one vertex required");
  EmbeddedGraph g;
  g.m_ = m;
  g.edges_ = std::move(edges);
  sort_edges(g.edges_);
  g.check_edges();
  for (const Edge& e : g.edges_) {
    auto it = slopes.find(e);
    if (it == slopes.end())
      throw InputError(InputError::Kind::BadInput, "missing slope for edge " + edge_key(e));
    g.slopes_.emplace(e, it->second);
  }
  if (slopes.size() != g.edges_.size())
    throw InputError(InputError::Kind::BadInput, "slope given for a non-edge");
  // General position forces the slopes at each vertex to be pairwise
  // distinct; that much is checkable without coordinates.
  for (int i = 1; i <= m; ++i) {
    std::set<Rat> seen;
    for (int j : g.neighbors(i))
      if (!seen.insert(g.slope(i, j)).second)
        throw InputError(InputError::Kind::CollinearTriple,
                         "repeated slope at vertex " + std::to_string(i));
  }
  return g;
}

EmbeddedGraph EmbeddedGraph::on_moment_curve(int m, long t0, std::vector<Edge> edges) {
  std::vector<Point> phi;
  phi.reserve(m);
  for (long t = t0; t < t0 + m; ++t) phi.push_back({Rat(t), Rat(t) * Rat(t)});
  return from_points(std::move(phi), std::move(edges));
}

EmbeddedGraph EmbeddedGraph::complete(int m, long t0) {
  if (m < 1) throw InputError(InputError::Kind::BadInput, "complete: need m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) edges.push_back({i, j});
  return on_moment_curve(m, t0, std::move(edges));
}

EmbeddedGraph EmbeddedGraph::cycle(int m, long t0) {
  if (m < 3) throw InputError(InputError::Kind::BadInput, "cycle: need m >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, m});
  return on_moment_curve(m, t0, std::move(edges));
}

EmbeddedGraph EmbeddedGraph::path(int m, long t0) {
  if (m < 1) throw InputError(InputError::Kind::BadInput, "path: need m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back({i, i + 1});
  return on_moment_curve(m, t0, std::move(edges));
}

EmbeddedGraph EmbeddedGraph::single_edge(long t0) { return path(2, t0); }

EmbeddedGraph EmbeddedGraph::cartesian_product(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                                               const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero())
    throw InputError(InputError::Kind::BadInput, "product: a and b must be nonzero");
  if (!g1.has_coordinates() || !g2.has_coordinates())
    throw InputError(InputError::Kind::BadInput, "product: both factors need coordinates");
  const int m1 = g1.vertex_count(), m2 = g2.vertex_count();
  if (m1 < 1 || m2 < 1)
    throw InputError(InputError::Kind::BadInput, "product: empty factor");

  auto id = [m2](int i, int s) { return (i - 1) * m2 + s; };
  std::vector<Point> phi(static_cast<std::size_t>(m1) * m2);
  for (int i = 1; i <= m1; ++i)
    for (int s = 1; s <= m2; ++s) {
      const Point& p = g1.point(i);
      const Point& q = g2.point(s);
      phi[id(i, s) - 1] = {a * p.x + b * q.x, a * p.y + b * q.y};
    }
  std::vector<Edge> edges;
  for (int i = 1; i <= m1; ++i)
    for (const Edge& e : g2.edges()) edges.push_back({id(i, e.first), id(i, e.second)});
  for (const Edge& e : g1.edges())
    for (int s = 1; s <= m2; ++s) edges.push_back({id(e.first, s), id(e.second, s)});

  return build(std::move(phi), std::move(edges), /*allow_shear=*/false);
}

GraphProduct EmbeddedGraph::cartesian_product_auto(const EmbeddedGraph& g1,
                                                             const EmbeddedGraph& g2) {
  std::string last = "no candidates tried";
  for (int s = 2; s <= 60; ++s) {
    for (int ai = 1; ai < s; ++ai) {
      const int bi = s - ai;
      if (std::gcd(ai, bi) != 1) continue;
      try {
        Rat a(static_cast<long>(ai)), b(static_cast<long>(bi));
        return GraphProduct{cartesian_product(g1, g2, a, b), a, b};
      } catch (const InputError& e) {
        if (e.kind == InputError::Kind::BadInput) throw;
        last = e.what();
      }
    }
  }
  throw InputError(InputError::Kind::GenerationFailed,
                   std::string("product: no (a, b) gives general position; last: ") + last);
}

EmbeddedGraph EmbeddedGraph::random_general_position(const RandomGraphSpec& spec,
                                                     std::uint64_t seed) {
  if (spec.m < 1) throw InputError(InputError::Kind::BadInput, "random: need m >= 1");
  std::mt19937_64 rng(seed);
  const long range =
      spec.coord_range > 0 ? spec.coord_range : 10L * spec.m * spec.m + 20;

  std::vector<Point> phi;
  std::set<Rat> seconds;
  for (int i = 0; i < spec.m; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 2000 && !placed; ++attempt) {
      Point cand{Rat(uniform_long(rng, -range, range)), Rat(uniform_long(rng, -range, range))};
      if (seconds.count(cand.y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < phi.size() && ok; ++j) {
        if (phi[j] == cand) ok = false;
        for (std::size_t k = j + 1; k < phi.size() && ok; ++k)
          if (cross(phi[j], phi[k], cand).is_zero()) ok = false;
      }
      if (!ok) continue;
      seconds.insert(cand.y);
      phi.push_back(cand);
      placed = true;
    }
    if (!placed)
      throw InputError(InputError::Kind::GenerationFailed,
                       "random: could not place vertex " + std::to_string(i + 1) +
                           "; widen coord_range");
  }

  std::vector<Edge> edges;
  if (spec.mode == RandomGraphSpec::EdgeMode::ErdosRenyi) {
    if (spec.density < Rat(0) || spec.density > Rat(1))
      throw InputError(InputError::Kind::BadInput, "random: density outside [0, 1]");
    const mpz_class num = spec.density.num(), den = spec.density.den();
    if (!den.fits_ulong_p())
      throw InputError(InputError::Kind::BadInput, "random: density denominator too large");
    for (int i = 1; i <= spec.m; ++i)
      for (int j = i + 1; j <= spec.m; ++j) {
        // include with probability num/den
        const std::uint64_t d = den.get_ui();
        if (uniform_u64(rng, d) < num.get_ui()) edges.push_back({i, j});
      }
  } else {
    const int d = spec.degree;
    if (d < 0 || d >= spec.m || (spec.m * d) % 2 != 0)
      throw InputError(InputError::Kind::BadInput,
                       "random: regular degree needs 0 <= d < m and m*d even");
    bool ok = false;
    for (int attempt = 0; attempt < 500 && !ok; ++attempt) {
      std::vector<int> stubs;
      for (int i = 1; i <= spec.m; ++i)
        for (int c = 0; c < d; ++c) stubs.push_back(i);
      for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[uniform_u64(rng, i)]);
      std::set<Edge> drawn;
      bool good = true;
      for (std::size_t i = 0; i + 1 < stubs.size() && good; i += 2) {
        if (stubs[i] == stubs[i + 1]) good = false;
        else if (!drawn.insert(normalized(stubs[i], stubs[i + 1])).second) good = false;
      }
      if (good) {
        edges.assign(drawn.begin(), drawn.end());
        ok = true;
      }
    }
    if (!ok)
      throw InputError(InputError::Kind::GenerationFailed, "random: regular pairing failed");
  }

  return from_points(std::move(phi), std::move(edges));
}

bool EmbeddedGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  return std::binary_search(edges_.begin(), edges_.end(), normalized(i, j));
}

const Point& EmbeddedGraph::point(int i) const {
  if (!coordinates_) throw InputError(InputError::Kind::BadInput, "no coordinates on this graph");
  if (i < 1 || i > m_) throw InputError(InputError::Kind::BadInput, "vertex out of range");
  return phi_[i - 1];
}

const Rat& EmbeddedGraph::slope(const Edge& e) const {
  auto it = slopes_.find(e);
  if (it == slopes_.end())
    throw InputError(InputError::Kind::BadInput, "not an edge: " + edge_key(e));
  return it->second;
}

Rat EmbeddedGraph::pair_slope(int i, int j) const {
  if (i == j) throw InputError(InputError::Kind::BadInput, "pair_slope: equal endpoints");
  const Edge e = normalized(i, j);
  auto it = slopes_.find(e);
  if (it != slopes_.end()) return it->second;
  const Point& pi = point(e.first);
  const Point& pj = point(e.second);
  return -(pj.x - pi.x) / (pj.y - pi.y);
}

int EmbeddedGraph::degree(int i) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (e.first == i || e.second == i) ++d;
  return d;
}

int EmbeddedGraph::max_degree() const {
  std::vector<int> deg(m_ + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.first];
    ++deg[e.second];
  }
  int mx = 0;
  for (int i = 1; i <= m_; ++i) mx = std::max(mx, deg[i]);
  return mx;
}

std::vector<int> EmbeddedGraph::neighbors(int i) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.first == i) out.push_back(e.second);
    else if (e.second == i) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> EmbeddedGraph::component_ids() const {
  std::vector<int> id(m_, -1);
  std::vector<std::vector<int>> adj(m_ + 1);
  for (const Edge& e : edges_) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  int next = 0;
  for (int start = 1; start <= m_; ++start) {
    if (id[start - 1] != -1) continue;
    std::vector<int> stack{start};
    id[start - 1] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (id[w - 1] == -1) {
          id[w - 1] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return id;
}

int EmbeddedGraph::component_count() const {
  const std::vector<int> id = component_ids();
  int mx = -1;
  for (int c : id) mx = std::max(mx, c);
  return mx + 1;
}

bool EmbeddedGraph::is_regular(int* degree_out) const {
  if (m_ == 0) return true;
  const int d = degree(1);
  for (int i = 2; i <= m_; ++i)
    if (degree(i) != d) return false;
  if (degree_out != nullptr) *degree_out = d;
  return true;
}

bool EmbeddedGraph::is_complete() const {
  return edge_count() == static_cast<std::size_t>(m_) * (m_ - 1) / 2;
}

EmbeddedGraph EmbeddedGraph::sheared(const Rat& t) const {
  if (!coordinates_) throw InputError(InputError::Kind::BadInput, "shear needs coordinates");
  std::vector<Point> phi = phi_;
  for (Point& p : phi) p.y += t * p.x;
  std::set<Rat> seen;
  for (const Point& p : phi)
    if (!seen.insert(p.y).second)
      throw InputError(InputError::Kind::BadShear,
                       "shear by " + t.str() + " collides second coordinates");
  EmbeddedGraph g = *this;
  g.phi_ = std::move(phi);
  g.shear_t_ = shear_t_ + t;
  g.compute_slopes();
  return g;
}

EmbeddedGraph EmbeddedGraph::delete_vertex(int t) const {
  if (t < 1 || t > m_) throw InputError(InputError::Kind::BadInput, "delete_vertex: out of range");
  std::vector<int> keep;
  for (int i = 1; i <= m_; ++i)
    if (i != t) keep.push_back(i);
  return induced(keep);
}

EmbeddedGraph EmbeddedGraph::delete_edges(const std::vector<Edge>& f) const {
  EmbeddedGraph g = *this;
  for (Edge e : f) {
    e = normalized(e.first, e.second);
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
    if (it == g.edges_.end() || *it != e)
      throw InputError(InputError::Kind::BadInput, "delete_edges: not an edge: " + edge_key(e));
    g.edges_.erase(it);
    g.slopes_.erase(e);
  }
  return g;
}

EmbeddedGraph EmbeddedGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> old_to_new(m_ + 1, 0);
  int next = 1;
  for (int v : keep) {
    if (v < 1 || v > m_) throw InputError(InputError::Kind::BadInput, "induced: vertex out of range");
    if (old_to_new[v] != 0) throw InputError(InputError::Kind::BadInput, "induced: repeated vertex");
    old_to_new[v] = next++;
  }
  for (std::size_t i = 1; i < keep.size(); ++i)
    if (keep[i - 1] >= keep[i])
      throw InputError(InputError::Kind::BadInput, "induced: ids must ascend");

  EmbeddedGraph g;
  g.m_ = static_cast<int>(keep.size());
  g.coordinates_ = coordinates_;
  g.shear_t_ = shear_t_;
  if (coordinates_)
    for (int v : keep) g.phi_.push_back(phi_[v - 1]);
  for (const Edge& e : edges_) {
    if (old_to_new[e.first] == 0 || old_to_new[e.second] == 0) continue;
    Edge ne = normalized(old_to_new[e.first], old_to_new[e.second]);
    g.edges_.push_back(ne);
    g.slopes_.emplace(ne, slopes_.at(e));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

std::string EmbeddedGraph::to_json() const {
  json j;
  j["m"] = m_;
  json edges = json::array();
  for (const Edge& e : edges_) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  if (coordinates_) {
    json phi = json::array();
    for (const Point& p : phi_) phi.push_back({p.x.str(), p.y.str()});
    j["phi"] = phi;
  } else {
    json slopes = json::object();
    for (const auto& [e, a] : slopes_) slopes[edge_key(e)] = a.str();
    j["slopes"] = slopes;
    j["unchecked"] = true;
  }
  return j.dump();
}

EmbeddedGraph EmbeddedGraph::from_json(const std::string& text, bool allow_unchecked_slopes) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(InputError::Kind::BadInput, std::string("bad JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("edges"))
      throw InputError(InputError::Kind::BadInput, "graph JSON needs \"m\" and \"edges\"");
    const int m = j.at("m").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw InputError(InputError::Kind::BadEdge, "edges must be [i, j] pairs");
      edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    auto parse_rat = [](const json& v) {
      if (v.is_string()) return Rat::parse(v.get<std::string>());
      if (v.is_number_integer()) return Rat(v.get<long>());
      throw InputError(InputError::Kind::BadInput, "rationals must be strings like \"p/q\"");
    };
    if (j.contains("phi")) {
      const auto& phi_j = j.at("phi");
      if (static_cast<int>(phi_j.size()) != m)
        throw InputError(InputError::Kind::BadInput, "phi must list one point per vertex");
      std::vector<Point> phi;
      for (const auto& p : phi_j) {
        if (!p.is_array() || p.size() != 2)
          throw InputError(InputError::Kind::BadInput, "phi entries must be [x, y]");
        phi.push_back({parse_rat(p.at(0)), parse_rat(p.at(1))});
      }
      return from_points(std::move(phi), std::move(edges));
    }
    if (j.contains("slopes")) {
      if (!allow_unchecked_slopes)
        throw InputError(InputError::Kind::BadInput,
                         "slope-only input requires explicit opt in (--slopes-unchecked)");
      if (!j.value("unchecked", false))
        throw InputError(InputError::Kind::BadInput,
                         "slope-only input must set \"unchecked\": true");
      std::map<Edge, Rat> slopes;
      for (const auto& [key, val] : j.at("slopes").items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos)
          throw InputError(InputError::Kind::BadInput, "slope keys look like \"i-j\"");
        const int a = std::stoi(key.substr(0, dash));
        const int b = std::stoi(key.substr(dash + 1));
        if (a >= b) throw InputError(InputError::Kind::BadInput, "slope keys need i < j");
        slopes.emplace(Edge{a, b}, parse_rat(val));
      }
      return from_slopes(m, std::move(edges), slopes);
    }
    throw InputError(InputError::Kind::BadInput, "graph JSON needs \"phi\" or \"slopes\"");
  } catch (const json::exception& e) {
    throw InputError(InputError::Kind::BadInput, std::string("bad graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(InputError::Kind::BadInput, std::string("bad graph JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(InputError::Kind::BadInput, std::string("bad graph JSON: ") + e.what());
  }
}

}  // namespace gkm
