#pragma once

#include <vector>

#include "modhom/corpus.hpp"
#include "modhom/graph.hpp"

namespace fixtures {

using modhom::Edge;
using modhom::Graph;

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

inline Graph complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph(a + b, es);
}

// Hub 0 of degree 4 (three leaves plus hub 1), hub 1 of degree 3 (two leaves).
inline Graph two_hub_tree() { return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}}); }

inline modhom::BipartiteGraph bip_k2() { return modhom::BipartiteGraph(Graph(2, {{0, 1}}), {true, false}); }

}  // namespace fixtures
