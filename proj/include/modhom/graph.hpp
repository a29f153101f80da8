#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace modhom {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  // Throws InputError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  // Normalized (u < v) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return matrix_[u * n_ + v] != 0; }
  // Bitmask of neighbours; only valid when n() <= 64.
  std::uint64_t neighbor_mask(int v) const { return masks_[v]; }

  // Subgraph induced on `keep`, relabelled 0..k-1 in the given order.
  Graph induced(const std::vector<int>& keep) const;
  // Graph with `other` appended as a disjoint copy (ids shifted by n()).
  Graph disjoint_union(const Graph& other) const;
  Graph relabelled(const std::vector<int>& new_id) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
  std::vector<std::uint64_t> masks_;
};

// Undirected multigraph; parallel edges and loops allowed.
class Multigraph {
 public:
  struct Bundle {
    int u;
    int v;
    int multiplicity;
  };

  Multigraph() = default;
  // One list entry per edge copy; (v, v) is a loop.
  Multigraph(int n, const std::vector<Edge>& edges);
  static Multigraph from_graph(const Graph& g);

  int n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  // Aggregated edges with u <= v, sorted.
  const std::vector<Bundle>& bundles() const { return bundles_; }
  bool is_simple() const;
  // Throws InputError if loops or parallel edges are present.
  Graph to_simple() const;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Bundle> bundles_;
};

// Bipartite graph with a fixed side assignment; every edge crosses sides.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Throws InputError if an edge joins two vertices of the same side.
  BipartiteGraph(Graph g, std::vector<bool> is_left);

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  bool is_left(int v) const { return is_left_[v]; }
  const std::vector<bool>& sides() const { return is_left_; }
  std::vector<int> left() const;
  std::vector<int> right() const;

 private:
  Graph graph_;
  std::vector<bool> is_left_;
};

// Graph with some vertices pinned to target vertices.
struct PartiallyLabelledGraph {
  Graph base;
  std::map<int, int> pins;
};

// Multigraph with some vertices pinned to spin 0 or 1.
struct PinnedSpinGraph {
  Multigraph graph;
  std::map<int, int> pins;
};

// Graph with an ordered tuple of (not necessarily distinct) marked vertices.
struct DistinguishedGraph {
  Graph base;
  std::vector<int> marks;
};

// Glue two marked graphs by identifying corresponding marks. Marks must have
// equal arity; the result carries the marks of the first graph.
DistinguishedGraph identify_marks(const DistinguishedGraph& a, const DistinguishedGraph& b);

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }
  std::uint64_t order() const { return order_; }
  bool is_identity() const { return order_ == 1; }
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> fixed_points() const;
  // (this * other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  // Cycle notation with 1-indexed vertices, fixed points omitted; "()" for identity.
  std::string cycle_notation() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
  std::uint64_t order_;
};

bool is_automorphism(const Graph& g, const Permutation& rho);

struct StructureReport {
  std::vector<std::vector<int>> components;
  // Colour 0/1 per vertex; absent iff some component has an odd cycle.
  std::optional<std::vector<int>> bipartition;
  bool is_tree = false;
  bool is_forest = false;
  bool is_star = false;
  std::vector<bool> component_bipartite;
  // Per component: bipartite with every cross pair adjacent. A lone vertex counts.
  std::vector<bool> complete_bipartite;
  // Per component part sizes (colour 0 count, colour 1 count) when bipartite.
  std::vector<std::pair<int, int>> part_sizes;
};

StructureReport analyze_structure(const Graph& g);

// Closed walk of odd length (first vertex repeated at the end), or empty when g is bipartite.
std::vector<int> find_odd_closed_walk(const Graph& g);

// Shortest-path distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

}  // namespace modhom
