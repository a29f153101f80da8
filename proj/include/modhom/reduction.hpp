#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/graph.hpp"

namespace modhom {

// Lexicographically least automorphism of order exactly p, if any.
std::optional<Permutation> find_order_p_automorphism(const Graph& h, std::uint64_t p,
                                                     const Budget& budget = default_budget());

// Subgraph induced on the fixed points of rho (relabelled in increasing order).
// Throws InputError if rho is not an automorphism of h.
Graph fixed_subgraph(const Graph& h, const Permutation& rho);

struct ReductionStep {
  Graph before;
  Permutation rho;
  Graph after;
  std::vector<int> kept;  // ids in `before` of the vertices of `after`
};

enum class TieBreak { deterministic, all_paths };

struct ReductionTrace {
  std::uint64_t p = 2;
  Graph input;
  std::vector<ReductionStep> steps;
  Graph result;
  std::vector<int> result_ids;  // input ids of the result vertices
  // all_paths only: every distinct terminal graph reached, as input vertex sets.
  std::vector<std::vector<int>> leaves;
  bool leaves_isomorphic = true;
};

// Repeatedly restrict to the fixed points of the least order-p automorphism.
// In all_paths mode every choice is also explored and the terminal graphs are
// compared pairwise; the deterministic trace is still reported.
ReductionTrace reduced_form(const Graph& h, std::uint64_t p, TieBreak mode = TieBreak::deterministic,
                            const Budget& budget = default_budget());

}  // namespace modhom
