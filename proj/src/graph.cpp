#include "modhom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range: " + edge_str(u, v));
    if (u == v) throw InputError("loop not allowed in a simple graph: " + edge_str(u, v));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InputError("duplicate edge " + edge_str(dup->first, dup->second));

  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    matrix_[u * n + v] = matrix_[v * n + u] = 1;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (n <= 64) {
    masks_.assign(n, 0);
    for (auto [u, v] : edges_) {
      masks_[u] |= 1ULL << v;
      masks_[v] |= 1ULL << u;
    }
  }
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos[keep[i]] = i;
  std::vector<Edge> es;
  for (auto [u, v] : edges_) {
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  }
  return Graph(static_cast<int>(keep.size()), es);
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<Edge> es = edges_;
  for (auto [u, v] : other.edges()) es.emplace_back(u + n_, v + n_);
  return Graph(n_ + other.n(), es);
}

Graph Graph::relabelled(const std::vector<int>& new_id) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(new_id[u], new_id[v]);
  return Graph(n_, es);
}

Multigraph::Multigraph(int n, const std::vector<Edge>& edges) : n_(n), edge_count_(edges.size()) {
  if (n < 0) throw InputError("negative vertex count");
  std::map<Edge, int> count;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range: " + edge_str(u, v));
    ++count[{std::min(u, v), std::max(u, v)}];
  }
  for (auto& [e, c] : count) bundles_.push_back({e.first, e.second, c});
}

Multigraph Multigraph::from_graph(const Graph& g) { return Multigraph(g.n(), g.edges()); }

bool Multigraph::is_simple() const {
  return std::all_of(bundles_.begin(), bundles_.end(),
                     [](const Bundle& b) { return b.u != b.v && b.multiplicity == 1; });
}

Graph Multigraph::to_simple() const {
  std::vector<Edge> es;
  for (const auto& b : bundles_) {
    if (b.u == b.v) throw InputError("loop at vertex " + std::to_string(b.u + 1));
    if (b.multiplicity > 1) throw InputError("parallel edges " + edge_str(b.u, b.v));
    es.emplace_back(b.u, b.v);
  }
  return Graph(n_, es);
}

BipartiteGraph::BipartiteGraph(Graph g, std::vector<bool> is_left)
    : graph_(std::move(g)), is_left_(std::move(is_left)) {
  if (static_cast<int>(is_left_.size()) != graph_.n()) throw InputError("side vector size mismatch");
  for (auto [u, v] : graph_.edges()) {
    if (is_left_[u] == is_left_[v]) throw InputError("edge " + edge_str(u, v) + " joins two vertices of the same side");
  }
}

std::vector<int> BipartiteGraph::left() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (is_left_[v]) out.push_back(v);
  return out;
}

std::vector<int> BipartiteGraph::right() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (!is_left_[v]) out.push_back(v);
  return out;
}

DistinguishedGraph identify_marks(const DistinguishedGraph& a, const DistinguishedGraph& b) {
  if (a.marks.size() != b.marks.size()) throw InputError("mark arity mismatch");
  // Union-find over the disjoint union, merging corresponding marks.
  int n = a.base.n() + b.base.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < a.marks.size(); ++i) {
    int x = find(a.marks[i]), y = find(b.marks[i] + a.base.n());
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<int> id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (id[r] < 0) id[r] = next++;
    id[v] = id[r];
  }
  std::set<Edge> es;
  for (auto [u, v] : a.base.edges()) es.insert({std::min(id[u], id[v]), std::max(id[u], id[v])});
  for (auto [u, v] : b.base.edges()) {
    int x = id[u + a.base.n()], y = id[v + a.base.n()];
    if (x == y) throw InputError("identifying marks would create a loop");
    es.insert({std::min(x, y), std::max(x, y)});
  }
  DistinguishedGraph out{Graph(next, {es.begin(), es.end()}), {}};
  for (int m : a.marks) out.marks.push_back(id[m]);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)), order_(1) {
  int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) throw InputError("image array is not a bijection");
    seen[x] = 1;
  }
  for (const auto& c : cycles()) order_ = std::lcm(order_, static_cast<std::uint64_t>(c.size()));
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int x = s; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (images_[v] == v) out.push_back(v);
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.n() != n()) throw InputError("permutation size mismatch");
  std::vector<int> img(n());
  for (int v = 0; v < n(); ++v) img[v] = images_[other.images_[v]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(n());
  for (int v = 0; v < n(); ++v) img[images_[v]] = v;
  return Permutation(std::move(img));
}

std::string Permutation::cycle_notation() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

bool is_automorphism(const Graph& g, const Permutation& rho) {
  if (rho.n() != g.n()) return false;
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(rho(u), rho(v))) return false;
  }
  // A bijection mapping edges into edges is onto the edge set (finite sets).
  return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

StructureReport analyze_structure(const Graph& g) {
  StructureReport rep;
  const int n = g.n();
  std::vector<int> colour(n, -1);
  bool bipartite = true;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    std::vector<int> comp{s};
    colour[s] = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int x = comp[i];
      for (int y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          comp.push_back(y);
        } else if (colour[y] == colour[x]) {
          bipartite = false;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    rep.components.push_back(std::move(comp));
  }

  std::vector<int> comp_of(n, -1);
  for (std::size_t c = 0; c < rep.components.size(); ++c)
    for (int v : rep.components[c]) comp_of[v] = static_cast<int>(c);
  std::vector<std::size_t> comp_edges(rep.components.size(), 0);
  for (auto [u, v] : g.edges()) ++comp_edges[comp_of[u]];

  for (std::size_t c = 0; c < rep.components.size(); ++c) {
    const auto& comp = rep.components[c];
    int x = 0, y = 0;
    bool comp_bip = true;
    for (int v : comp) (colour[v] == 0 ? x : y)++;
    for (int v : comp)
      for (int w : g.neighbors(v))
        if (colour[v] == colour[w]) comp_bip = false;
    rep.part_sizes.emplace_back(x, y);
    rep.component_bipartite.push_back(comp_bip);
    rep.complete_bipartite.push_back(comp_bip &&
                                     comp_edges[c] == static_cast<std::size_t>(x) * static_cast<std::size_t>(y));
  }
  if (bipartite) rep.bipartition = colour;

  rep.is_forest = g.m() + rep.components.size() == static_cast<std::size_t>(n);
  rep.is_tree = n > 0 && rep.components.size() == 1 && rep.is_forest;
  if (rep.is_tree) {
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    rep.is_star = n <= 2 || max_deg == n - 1;
  }
  return rep;
}

std::vector<int> find_odd_closed_walk(const Graph& g) {
  const int n = g.n();
  std::vector<int> colour(n, -1), parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          parent[y] = x;
          q.push(y);
        } else if (colour[y] == colour[x]) {
          // Tree paths x->s and y->s have equal parity; joined by edge xy they close an odd walk.
          std::vector<int> up_x, up_y;
          for (int a = x; a >= 0; a = parent[a]) up_x.push_back(a);
          for (int b = y; b >= 0; b = parent[b]) up_y.push_back(b);
          std::vector<int> walk(up_x.begin(), up_x.end());
          walk.insert(walk.end(), up_y.rbegin() + 1, up_y.rend());
          walk.push_back(x);
          return walk;
        }
      }
    }
  }
  return {};
}

}  // namespace modhom
