#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/graph.hpp"
#include "modhom/reduction.hpp"
#include "modhom/zp.hpp"

namespace modhom {

// Path x_0..x_k, the only x_0-x_k path in its graph, with end degrees
// a, b != 1 and interior degrees == 1 (all mod p).
struct AbPath {
  std::vector<int> vertices;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t p = 2;

  int k() const { return static_cast<int>(vertices.size()) - 1; }
};

// Number of simple s-t paths, counting stops at `limit`.
int count_simple_paths(const Graph& h, int s, int t, int limit);

// Independent re-check of every defining condition; empty string when valid.
std::string ab_path_violation(const Graph& h, const AbPath& path);
inline bool validate_ab_path(const Graph& h, const AbPath& path) { return ab_path_violation(h, path).empty(); }

// Exhaustive pair search; returns the path minimizing (k, vertex list).
std::optional<AbPath> find_ab_path(const Graph& h, std::uint64_t p);

// Tree construction: take the least longest path y, x_0, ..., x_l and stop at
// the first x_k (1 <= k <= l-1) whose degree is not 1 mod p. Returns nullopt
// for stars, non-trees, or when the end degrees come out == 1 (possible only
// when the tree has an automorphism of order p).
std::optional<AbPath> ab_path_from_longest_path(const Graph& tree, std::uint64_t p);

enum class Verdict { PolyTime, Hard, Unknown };
std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::uint64_t p = 2;
  ReductionTrace reduction;
  // PolyTime: part sizes of each complete bipartite component of the reduced graph.
  std::vector<std::pair<int, int>> bipartite_parts;
  // Hard: certificate in reduced-graph ids.
  std::optional<AbPath> path;
};

Classification classify(const Graph& h, std::uint64_t p, const Budget& budget = default_budget());

// Closed-form count mod p for targets whose components are all complete
// bipartite. Throws InputError otherwise.
ZpScalar count_homs_polytime(const Graph& g, const Graph& h, std::uint64_t p);

}  // namespace modhom
