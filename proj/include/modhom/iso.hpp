#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/graph.hpp"

namespace modhom {

// Exhaustive search for a marks-respecting isomorphism. Throws BudgetExceeded
// above budget.iso_max_vertices.
bool are_isomorphic(const DistinguishedGraph& a, const DistinguishedGraph& b,
                    const Budget& budget = default_budget());

inline bool are_isomorphic(const Graph& a, const Graph& b, const Budget& budget = default_budget()) {
  return are_isomorphic(DistinguishedGraph{a, {}}, DistinguishedGraph{b, {}}, budget);
}

// All automorphisms in increasing order of image arrays, identity first.
std::vector<Permutation> automorphism_group(const Graph& g, const Budget& budget = default_budget());

// Visit automorphisms in increasing order of image arrays until `visit`
// returns false. With cycle_length = p > 0 only automorphisms whose cycles all
// have length 1 or p, excluding the identity, are visited; for prime p these
// are exactly the automorphisms of order p.
void for_each_automorphism(const Graph& g, const std::function<bool(const Permutation&)>& visit,
                           std::uint64_t cycle_length = 0, const Budget& budget = default_budget());

}  // namespace modhom
