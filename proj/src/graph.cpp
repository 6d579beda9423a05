#include "wgcount/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wg {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& context) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw GraphError("invalid integer '" + s + "' in " + context);
  }
  return v;
}

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    throw GraphError("family '" + spec.name + "' expects " + std::to_string(count) + " parameter(s), got " +
                     std::to_string(spec.params.size()));
  }
}

long param_at_least(const FamilySpec& spec, std::size_t i, long lo) {
  long v = spec.params[i];
  if (v < lo) throw GraphError("family '" + spec.name + "' parameter must be >= " + std::to_string(lo));
  return v;
}

constexpr long kMaxVertices = 1 << 16;

void check_size(long m) {
  if (m > kMaxVertices) throw GraphError("graph too large: " + std::to_string(m) + " vertices");
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string s = name;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return s;
}

FamilySpec parse_family_spec(const std::string& text) {
  std::string t = trim(text);
  FamilySpec spec;
  auto colon = t.find(':');
  spec.name = t.substr(0, colon);
  if (spec.name.empty() || !std::all_of(spec.name.begin(), spec.name.end(), [](unsigned char c) {
        return std::islower(c);
      })) {
    throw GraphError("malformed family name in '" + text + "'");
  }
  if (colon != std::string::npos) {
    std::string rest = t.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) spec.params.push_back(parse_long(trim(item), "'" + text + "'"));
    if (spec.params.empty() || rest.back() == ',') throw GraphError("malformed parameters in '" + text + "'");
  }
  return spec;
}

Graph::Graph(int m, std::vector<std::pair<int, int>> edges, std::optional<FamilySpec> label)
    : m_(m), label_(std::move(label)) {
  if (m < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= m || b >= m) {
      throw GraphError("edge endpoint out of range: {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  adj_.assign(static_cast<std::size_t>(m), {});
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph family(const FamilySpec& spec) {
  using EdgeList = std::vector<std::pair<int, int>>;
  EdgeList e;
  long m = 0;
  const std::string& n = spec.name;
  if (n == "null") {
    expect_params(spec, 0);
  } else if (n == "octahedron") {
    expect_params(spec, 0);
    m = 6;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (j != (i ^ 1)) e.emplace_back(i, j);
  } else if (n == "path") {
    expect_params(spec, 1);
    m = param_at_least(spec, 0, 1);
    check_size(m);
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  } else if (n == "cycle") {
    expect_params(spec, 1);
    m = param_at_least(spec, 0, 1);
    check_size(m);
    for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
    if (m >= 3) e.emplace_back(0, static_cast<int>(m - 1));
  } else if (n == "complete" || n == "discrete") {
    expect_params(spec, 1);
    m = param_at_least(spec, 0, 0);
    check_size(m);
    if (n == "complete")
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) e.emplace_back(i, j);
  } else if (n == "star") {
    expect_params(spec, 1);
    m = param_at_least(spec, 0, 0) + 1;
    check_size(m);
    for (int i = 1; i < m; ++i) e.emplace_back(0, i);
  } else if (n == "biclique") {
    expect_params(spec, 2);
    long p = param_at_least(spec, 0, 0);
    long q = param_at_least(spec, 1, 0);
    m = p + q;
    check_size(m);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) e.emplace_back(i, static_cast<int>(p) + j);
  } else if (n == "hypercube") {
    expect_params(spec, 1);
    long d = param_at_least(spec, 0, 0);
    if (d > 16) throw GraphError("hypercube dimension too large");
    m = 1L << d;
    for (int v = 0; v < m; ++v)
      for (int b = 0; b < d; ++b)
        if (int w = v ^ (1 << b); v < w) e.emplace_back(v, w);
  } else if (n == "grid") {
    expect_params(spec, 2);
    long p = param_at_least(spec, 0, 1);
    long q = param_at_least(spec, 1, 1);
    m = p * q;
    check_size(m);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < q; ++c) {
        int v = static_cast<int>(r * q + c);
        if (c + 1 < q) e.emplace_back(v, v + 1);
        if (r + 1 < p) e.emplace_back(v, v + static_cast<int>(q));
      }
  } else {
    throw GraphError("unknown graph family '" + n + "'");
  }
  return Graph(static_cast<int>(m), std::move(e), spec);
}

Graph family(const std::string& dsl) { return family(parse_family_spec(dsl)); }

Graph parse_graph(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw GraphError("empty graph description");
  if (t.front() == '"' && t.back() == '"' && t.size() >= 2) t = t.substr(1, t.size() - 2);
  if (t.front() != '{') return family(t);

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(t);
  } catch (const nlohmann::json::parse_error& ex) {
    throw GraphError(std::string("malformed graph document: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("edges")) {
    throw GraphError("graph document needs fields 'm' and 'edges'");
  }
  const auto& mj = doc["m"];
  if (!mj.is_number_integer() || mj.get<long>() < 0 || mj.get<long>() > kMaxVertices) {
    throw GraphError("field 'm' must be a nonnegative integer");
  }
  if (!doc["edges"].is_array()) throw GraphError("field 'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw GraphError("each edge must be a 2-element integer array");
    }
    long a = e[0].get<long>();
    long b = e[1].get<long>();
    if (a < 0 || b < 0 || a > kMaxVertices || b > kMaxVertices) {
      throw GraphError("edge endpoint out of range");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Graph(mj.get<int>(), std::move(edges));
}

std::string to_json_text(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json doc = {{"m", g.vertex_count()}, {"edges", edges}};
  return doc.dump();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e;
  for (const Edge& x : a.edges()) e.emplace_back(x.u, x.v);
  const int off = a.vertex_count();
  for (const Edge& x : b.edges()) e.emplace_back(x.u + off, x.v + off);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(e));
}

Graph with_edge(const Graph& g, int u, int v) {
  std::vector<std::pair<int, int>> e;
  for (const Edge& x : g.edges()) e.emplace_back(x.u, x.v);
  e.emplace_back(u, v);
  return Graph(g.vertex_count(), std::move(e));
}

BipartiteResult is_bipartite(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  std::vector<int> parent(static_cast<std::size_t>(m), -1);
  std::vector<int> depth(static_cast<std::size_t>(m), 0);
  for (int root = 0; root < m; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Climb both BFS branches to their common ancestor.
          std::vector<int> left{u};
          std::vector<int> right{w};
          int a = u;
          int b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BipartiteResult r;
          r.bipartite = false;
          r.odd_cycle.assign(left.begin(), left.end());
          r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
          // Rotate so the cycle starts at its smallest vertex.
          auto mn = std::min_element(r.odd_cycle.begin(), r.odd_cycle.end());
          std::rotate(r.odd_cycle.begin(), mn, r.odd_cycle.end());
          if (r.odd_cycle.size() > 2 && r.odd_cycle[1] > r.odd_cycle.back()) {
            std::reverse(r.odd_cycle.begin() + 1, r.odd_cycle.end());
          }
          return r;
        }
      }
    }
  }
  BipartiteResult r;
  r.coloring = std::move(color);
  return r;
}

std::vector<Component> components(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  std::vector<Component> out;
  for (int root = 0; root < m; ++root) {
    if (comp[root] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members;
    std::vector<int> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<int> local(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
      if (comp[e.u] == id) edges.emplace_back(local[e.u], local[e.v]);
    out.push_back(Component{Graph(static_cast<int>(members.size()), std::move(edges)), std::move(members)});
  }
  return out;
}

EliminationPlan elimination_order(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(m));
  for (const Edge& e : g.edges()) {
    nbr[e.u].insert(e.v);
    nbr[e.v].insert(e.u);
  }
  std::vector<bool> done(static_cast<std::size_t>(m), false);
  EliminationPlan plan;
  plan.order.reserve(static_cast<std::size_t>(m));
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int v = 0; v < m; ++v)
      if (!done[v] && (best == -1 || nbr[v].size() < nbr[best].size())) best = v;
    const std::vector<int> hood(nbr[best].begin(), nbr[best].end());
    plan.width = std::max(plan.width, static_cast<int>(hood.size()));
    for (int a : hood) {
      nbr[a].erase(best);
      for (int b : hood)
        if (a != b) nbr[a].insert(b);
    }
    nbr[best].clear();
    done[best] = true;
    plan.order.push_back(best);
  }
  return plan;
}

void check_plan(const Graph& g, const EliminationPlan& plan) {
  std::vector<int> sorted = plan.order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(g.vertex_count()));
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect) throw GraphError("elimination order is not a permutation of the vertices");
}

}  // namespace wg
