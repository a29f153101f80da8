#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modhom/budget.hpp"
#include "modhom/graph.hpp"
#include "modhom/zp.hpp"

namespace modhom {

using BigInt = boost::multiprecision::cpp_int;

struct HomCount {
  std::optional<BigInt> exact;
  std::optional<ZpScalar> residue;
};

// Number of homomorphisms respecting the pins. With p the count is kept mod p
// only; without p it is exact. Target graphs are limited to 64 vertices.
HomCount count_homs(const PartiallyLabelledGraph& j, const Graph& h, std::optional<std::uint64_t> p,
                    const Budget& budget = default_budget());
HomCount count_homs(const Graph& g, const Graph& h, std::optional<std::uint64_t> p,
                    const Budget& budget = default_budget());

// Residue of the pinned count; a vertex pinned twice to different targets gives 0.
std::uint64_t count_homs_mod(const Graph& g, const std::vector<int>& marks, const std::vector<int>& targets,
                             const Graph& h, std::uint64_t p, const Budget& budget = default_budget());

// Visit every homomorphism explicitly (no counting shortcuts) until `visit`
// returns false. Used by audits that inspect the maps themselves.
void for_each_hom(const PartiallyLabelledGraph& j, const Graph& h,
                  const std::function<bool(const std::vector<int>&)>& visit,
                  const Budget& budget = default_budget());

// Entry (x, y) of A(h)^k.
BigInt count_walks(const Graph& h, int x, int y, int k);
std::vector<std::vector<BigInt>> walk_matrix(const Graph& h, int k);
std::vector<std::vector<std::uint64_t>> walk_matrix_mod(const Graph& h, int k, std::uint64_t p);

// A graph whose edges stand for paths of the given lengths.
struct Skeleton {
  Graph graph;
  std::vector<int> lengths;  // aligned with graph.edges()

  static Skeleton make(int n, const std::vector<std::tuple<int, int, int>>& edges);
};

// Fully subdivided graph. Skeleton vertices keep their ids; interior vertices
// follow in edge order, ordered from the smaller endpoint.
Graph expand_skeleton(const Skeleton& s);

// Hom count mod p of the expansion, via walk-matrix entries per skeleton edge.
ZpScalar count_homs_subdivided(const Skeleton& skeleton, const std::map<int, int>& pins, const Graph& h,
                               std::uint64_t p, const Budget& budget = default_budget());

}  // namespace modhom
