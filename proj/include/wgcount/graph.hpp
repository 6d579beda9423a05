#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wg {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge with u < v.
struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A named construction such as `cycle:5` or `biclique:3,4`.
struct FamilySpec {
  std::string name;
  std::vector<long> params;

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family_spec(const std::string& text);

/// Simple undirected graph on vertices 0..m-1. Immutable after construction;
/// edges are kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  /// Validates and normalizes: endpoints are ordered, the list is sorted.
  /// Self-loops, duplicates and out-of-range endpoints throw GraphError.
  Graph(int m, std::vector<std::pair<int, int>> edges, std::optional<FamilySpec> label = std::nullopt);

  int vertex_count() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;
  const std::optional<FamilySpec>& label() const { return label_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.m_ == b.m_ && a.edges_ == b.edges_; }

 private:
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::optional<FamilySpec> label_;
};

/// Named families: null, path:k, cycle:k, complete:t, star:t, discrete:t,
/// biclique:p,q, hypercube:d, octahedron, grid:p,q.
Graph family(const FamilySpec& spec);
Graph family(const std::string& dsl);

/// Accepts either a family DSL string or a JSON document {"m":..,"edges":[[i,j],..]}.
Graph parse_graph(const std::string& text);
std::string to_json_text(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph with_edge(const Graph& g, int u, int v);

struct BipartiteResult {
  bool bipartite = true;
  /// 0/1 color per vertex when bipartite.
  std::vector<int> coloring;
  /// Closed odd walk v0 v1 ... v_{k-1} (v_{k-1} adjacent to v0) otherwise.
  std::vector<int> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);

struct Component {
  Graph graph;
  std::vector<int> to_original;
};

/// Connected components ordered by their smallest original vertex.
std::vector<Component> components(const Graph& g);

struct EliminationPlan {
  std::vector<int> order;
  int width = 0;
};

/// Greedy min-degree order on the progressively filled graph; ties go to
/// the smallest index. Width is the largest neighbourhood at elimination.
EliminationPlan elimination_order(const Graph& g);

/// Throws GraphError unless plan.order is a permutation of the vertices.
void check_plan(const Graph& g, const EliminationPlan& plan);

}  // namespace wg
