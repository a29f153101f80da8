#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/dichotomy.hpp"
#include "modhom/graph.hpp"
#include "modhom/homcount.hpp"

namespace modhom {

// g with every edge stretched to a path of length k, plus two pinned apexes:
// one adjacent to all left vertices, one to all right vertices.
// Layout: g's vertices keep their ids, then left apex, right apex, then
// path interiors in edge order.
struct JConstruction {
  PartiallyLabelledGraph j;
  BipartiteGraph source;
  AbPath path;
  int left_apex = 0;
  int right_apex = 0;
  // Per source edge: the full vertex sequence from its left end to its right end.
  std::vector<std::vector<int>> edge_paths;
  // Same graph as a skeleton over g's vertices and the apexes.
  Skeleton skeleton;
};

JConstruction build_J(const BipartiteGraph& g, const AbPath& path);

struct WbisToHomsReport {
  AbPath path;
  int j_vertices = 0;
  std::uint64_t lhs = 0;  // |Hom(J, h)| mod p
  std::uint64_t rhs = 0;  // Z_{a-1,b-1}(g) mod p
  bool ok = false;
  std::string method;  // "subdivided" or "flat"
  // "passed", "skipped" (too many homs to enumerate) or the first violation.
  std::string audit = "skipped";
  int classes = 0;
};

// h must be a tree with an (a,b,p)-path. The audit enumerates every
// homomorphism within `audit_states` visited states.
WbisToHomsReport verify_wbis_to_homs(const BipartiteGraph& g, const Graph& h, std::uint64_t p,
                                     std::uint64_t audit_states = 2'000'000,
                                     const Budget& budget = default_budget());

struct ConnBisReport {
  Graph transformed;  // apex is the last vertex
  std::vector<int> rehomed;  // isolated right vertices moved to the left side
  BigInt is_source;
  BigInt right_subsets;  // 2^|V_R| after re-homing
  BigInt is_transformed;
  bool connected = false;
  bool ok = false;
};

ConnBisReport connbis_transform(const BipartiteGraph& g, const Budget& budget = default_budget());

struct P4Report {
  BigInt is_count;
  BigInt hom_count;
  bool ok = false;
  // "passed", "skipped" or the first violation of the set/map correspondence.
  std::string audit = "skipped";
};

// Throws InputError when g is empty or disconnected.
P4Report verify_p4_identity(const BipartiteGraph& g, std::uint64_t audit_states = 2'000'000,
                            const Budget& budget = default_budget());

// Smallest non-negative x with x == residues[i] mod moduli[i]; moduli pairwise coprime.
BigInt crt_reconstruct(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli);

// Distinct prime factors of a squarefree k >= 2; throws InputError otherwise.
std::vector<std::uint64_t> squarefree_factors(std::uint64_t k);

struct CompositeCount {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> residues;
  std::uint64_t value = 0;
};

// Count mod a squarefree k, assembled from the prime residues.
CompositeCount count_homs_mod_composite(const Graph& g, const Graph& h, std::uint64_t k,
                                        const Budget& budget = default_budget());

}  // namespace modhom
