#include "modhom/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

bool coin(double prob, Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < prob; }

int pick(int lo, int hi, Rng& rng) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Graph random_graph(int n, double density, Rng& rng) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(density, rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

BipartiteGraph random_bipartite(int n, double density, Rng& rng) {
  std::vector<bool> left(n);
  for (int v = 0; v < n; ++v) left[v] = coin(0.5, rng);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (left[u] != left[v] && coin(density, rng)) es.emplace_back(u, v);
  return BipartiteGraph(Graph(n, es), left);
}

BipartiteGraph random_connected_bipartite(int n, double density, Rng& rng) {
  if (n < 1) throw InputError("need at least one vertex");
  for (;;) {
    BipartiteGraph g = random_bipartite(n, density, rng);
    if (is_connected(g.graph())) return g;
  }
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw InputError("need at least one vertex");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(0, n - 1, rng);
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> es;
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  es.emplace_back(a, b);
  return Graph(n, es);
}

CnfFormula random_cnf(int n, int m, Rng& rng) {
  if (n < 1) throw InputError("need at least one variable");
  CnfFormula phi;
  phi.n = n;
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  for (int c = 0; c < m; ++c) {
    int width = pick(1, std::min(3, n), rng);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> clause;
    for (int i = 0; i < width; ++i) clause.push_back(coin(0.5, rng) ? vars[i] : -vars[i]);
    std::sort(clause.begin(), clause.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });
    phi.clauses.push_back(clause);
  }
  return phi;
}

}  // namespace modhom
