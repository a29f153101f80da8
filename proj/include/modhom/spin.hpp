#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/graph.hpp"
#include "modhom/zp.hpp"

namespace modhom {

struct SpinParams {
  std::uint64_t gamma = 1;
  std::uint64_t lambda = 1;
  std::uint64_t p = 2;

  static SpinParams make(long long gamma, long long lambda, std::uint64_t p);
  bool gamma_sq_is_one() const { return gamma * gamma % p == 1 % p; }
};

// Sum over spin assignments respecting the pins of gamma^(1-1 edges, loops and
// parallels counted with multiplicity) * lambda^(vertices with spin 0).
ZpScalar z_spin(const PinnedSpinGraph& j, const SpinParams& sp, const Budget& budget = default_budget());
// Same sum with lambda weighting the spin-1 vertices instead.
ZpScalar z_spin_ones(const PinnedSpinGraph& j, const SpinParams& sp, const Budget& budget = default_budget());

// lambda^-|V| * Z(gamma, lambda) == Z'(gamma, 1/lambda). Throws InputError for lambda == 0.
bool dual_check(const Multigraph& g, const SpinParams& sp, const Budget& budget = default_budget());

enum class ComponentKind { parallel, clique, p2, p3 };
std::string to_string(ComponentKind kind);
ComponentKind component_kind_from_string(const std::string& name);

// Halves (x spin 0, x spin 1) of a component hanging from x:
//   parallel: size edges from x to a vertex pinned to 1
//   clique:   K_size containing x
//   p2, p3:   path with 2 or 3 edges starting at x (size ignored)
std::pair<std::uint64_t, std::uint64_t> component_halves(ComponentKind kind, int size, const SpinParams& sp);
// Explicit component with x = vertex 0.
PinnedSpinGraph component_graph(ComponentKind kind, int size);
// Halves of an explicit graph at vertex x by direct evaluation.
std::pair<std::uint64_t, std::uint64_t> explicit_halves(const PinnedSpinGraph& j, int x, const SpinParams& sp,
                                                        const Budget& budget = default_budget());

// Copy counts of the gadget family for a given m >= 2: a parallel bundle,
// cliques K_2..K_{m-1}, and the paths P2, P3, all glued at x.
struct GadgetVector {
  int m = 2;
  int k0 = 0;
  std::vector<int> cliques;  // cliques[j-1] copies of K_{j+1}, j = 1..m-2
  int k_p2 = 0;
  int k_p3 = 0;

  // (k0, k_1, ..., k_{m-2}, k_P2, k_P3): m+1 entries.
  std::vector<int> entries() const;
  static GadgetVector from_entries(int m, const std::vector<int>& e);
  // Vertices of the explicit assembly.
  int vertex_count() const;
  std::string to_string() const;
};

std::pair<std::uint64_t, std::uint64_t> assemble_gadget(const GadgetVector& kv, const SpinParams& sp);
// Explicit assembly with x = vertex 0.
PinnedSpinGraph assemble_explicit(const GadgetVector& kv);

struct SearchBounds {
  int max_m = 0;      // 0: p + 1
  int entry_cap = 0;  // 0: p - 1

  static SearchBounds defaults_for(std::uint64_t p);
};

struct SearchResult {
  std::optional<GadgetVector> kv;
  std::uint64_t z0 = 0;
  std::uint64_t z1 = 0;
  int max_m_tried = 0;
};

// First vector, by increasing m and then with entries compared from k_P3 down
// to k0, whose halves agree and are nonzero. Requires lambda != 0, gamma^2 != 1.
SearchResult search_gadget(const SpinParams& sp, SearchBounds bounds);

enum class SpinClass { Easy, Hard, Unknown };
std::string to_string(SpinClass c);

struct SpinVerdict {
  SpinClass verdict = SpinClass::Unknown;
  std::string reason;
  // Hard witnesses.
  std::string witness_kind;  // "clique", "parallel" or "search"
  int witness_size = 0;      // clique order or parallel edge count
  std::optional<GadgetVector> kv;
  std::uint64_t z0 = 0;
  std::uint64_t z1 = 0;
};

SpinVerdict classify_spin(const SpinParams& sp, SearchBounds bounds);

}  // namespace modhom
