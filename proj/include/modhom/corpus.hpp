#pragma once

#include <cstdint>
#include <random>

#include "modhom/cnf.hpp"
#include "modhom/graph.hpp"

namespace modhom {

using Rng = std::mt19937_64;

// Each edge present independently with probability `density`.
Graph random_graph(int n, double density, Rng& rng);
// Sides drawn uniformly, then cross edges with probability `density`.
BipartiteGraph random_bipartite(int n, double density, Rng& rng);
// Resamples until connected; n >= 1.
BipartiteGraph random_connected_bipartite(int n, double density, Rng& rng);
// Uniform labelled tree via a Pruefer sequence.
Graph random_tree(int n, Rng& rng);
// m clauses of width 1..3 over n variables, distinct variables per clause.
CnfFormula random_cnf(int n, int m, Rng& rng);

}  // namespace modhom
