#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/graph.hpp"

namespace modhom {

// Pinned hom counts mod p over all r-tuples of target vertices, in
// lexicographic tuple order (first position most significant). In contracted
// form there is one entry per isomorphism class of (H, tuple), classes
// numbered by their lexicographically first member.
struct TupleVector {
  int r = 0;
  int target_n = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> entries;
  bool contracted = false;
  std::vector<int> index_map;                      // full index -> class (contracted only)
  std::vector<std::uint64_t> orbit_sizes;          // per class (contracted only)

  std::size_t full_length() const;
  // Tuple at a full (uncontracted) index.
  std::vector<int> tuple_at(std::size_t index) const;
  // One label per entry: the tuple, or the class representative tuple.
  std::vector<std::vector<int>> legend() const;
};

TupleVector tuple_vector(const DistinguishedGraph& g, const Graph& h, std::uint64_t p, bool contract,
                         const Budget& budget = default_budget());

enum class VecOp { add, mul };

TupleVector vec_combine(VecOp op, const TupleVector& a, const TupleVector& b);
TupleVector vec_scale(const TupleVector& a, std::uint64_t c);

struct Distinguisher {
  DistinguishedGraph probe;
  std::uint64_t value_a = 0;
  std::uint64_t value_b = 0;
};

// Smallest connected probe (by edge count, then edge list, then mark tuple)
// whose pinned counts mod p differ on the two mark tuples; nullopt when none
// exists with at most max_edges edges. Throws InputError when h has an
// automorphism of order p or the two marked graphs are isomorphic.
std::optional<Distinguisher> find_distinguisher(const Graph& h, const std::vector<int>& marks_a,
                                                const std::vector<int>& marks_b, std::uint64_t p, int max_edges,
                                                const Budget& budget = default_budget());

// Connected graphs with exactly e edges on vertex sets {0..s-1} (every vertex
// used), sorted by edge list. e = 0 gives the single vertex.
std::vector<Graph> connected_probes(int e);

}  // namespace modhom
