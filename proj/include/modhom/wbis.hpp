#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modhom/budget.hpp"
#include "modhom/cnf.hpp"
#include "modhom/graph.hpp"
#include "modhom/homcount.hpp"
#include "modhom/zp.hpp"

namespace modhom {

struct WbisWeights {
  std::uint64_t lambda_l = 1;
  std::uint64_t lambda_r = 1;
  std::uint64_t p = 2;

  // Reduces the weights and checks that p is prime.
  static WbisWeights make(long long lambda_l, long long lambda_r, std::uint64_t p);
};

// Sum over independent sets I of lambda_l^|I n V_L| * lambda_r^|I n V_R| mod p.
// Zero weights use the closed form; otherwise flat enumeration up to
// budget.wbis_flat_max vertices, branching up to budget.wbis_branch_max.
ZpScalar z_wbis(const BipartiteGraph& g, const WbisWeights& w, const Budget& budget = default_budget());
// Individual evaluation strategies, exposed for cross-checking.
std::uint64_t z_wbis_flat(const BipartiteGraph& g, const WbisWeights& w, const Budget& budget = default_budget());
std::uint64_t z_wbis_branching(const BipartiteGraph& g, const WbisWeights& w,
                               const Budget& budget = default_budget());
// Integer weights, no reduction.
BigInt z_wbis_exact(const BipartiteGraph& g, long long lambda_l, long long lambda_r,
                    const Budget& budget = default_budget());

// |I(g)| exactly.
BigInt count_independent_sets(const Graph& g, const Budget& budget = default_budget());

template <class T>
struct SplitSum {
  T left_only;   // nonempty sets inside V_L: (lambda_l+1)^|V_L| - 1
  T right_only;  // nonempty sets inside V_R: (lambda_r+1)^|V_R| - 1
  T mixed;       // sets meeting both sides, enumerated directly
  T total;       // 1 + left_only + right_only + mixed
};

SplitSum<std::uint64_t> split_sum_report(const BipartiteGraph& g, const WbisWeights& w,
                                         const Budget& budget = default_budget());
SplitSum<BigInt> split_sum_exact(const BipartiteGraph& g, long long lambda_l, long long lambda_r,
                                 const Budget& budget = default_budget());

// Independent sets with vertices on both sides, as sorted vertex lists.
std::vector<std::vector<int>> mixed_independent_sets(const BipartiteGraph& g, const Budget& budget = default_budget());

BipartiteGraph remove_vertices(const BipartiteGraph& g, const std::vector<int>& drop);

// K_{2(p-1),2(p-1)} minus the edges (u_i, v_i) for i <= k.
struct BGraph {
  BipartiteGraph graph;
  int k = 1;
  std::uint64_t p = 2;

  int half() const { return 2 * static_cast<int>(p - 1); }
  int u(int i) const { return i - 1; }           // 1-indexed left vertex
  int v(int i) const { return half() + i - 1; }  // 1-indexed right vertex
};

BGraph build_B(int k, std::uint64_t p);

struct BGadget {
  BGraph b;
  WbisWeights weights;
  int u_L = 0;
  int v_R = 0;
  std::string case_label;  // "i", "ii", "iii" or "iv"
  std::string verified_by;  // "flat" or "closed-form"
  std::uint64_t z_b = 0;
  std::uint64_t z_minus_uL = 0;
  std::uint64_t z_minus_vR = 0;
  // With the distinguished vertex in the set: its neighbours are excluded too.
  std::uint64_t z_minus_closed_uL = 0;
  std::uint64_t z_minus_closed_vR = 0;
};

// Picks k and the distinguished vertices by the four-way case split on
// whether each weight is -1, first matching case in order i..iv. Verifies
// Z(B) == 0 and Z(B - u_L), Z(B - v_R) != 0 before returning.
BGadget select_gadget(const WbisWeights& w, const Budget& budget = default_budget());

// Closed form for B(k,p) minus at most one vertex per side (-1 for none).
std::uint64_t z_B_closed_form(int k, const WbisWeights& w, int removed_left, int removed_right);

// Variable gadget cycle u v w vbar ubar z plus clause vertices y, with a copy
// of B attached at each w_i (via u_L), z_i and y_j (via v_R).
struct GPhi {
  BipartiteGraph graph;
  BGadget gadget;
  int n_vars = 0;
  int m_clauses = 0;
  int core_size = 0;
  // Per variable: ids of u, ubar, w, v, vbar, z.
  std::vector<std::array<int, 6>> var_ids;
  std::vector<int> clause_ids;
  // Per copy: core vertex it hangs from, and B vertex id -> graph id.
  std::vector<int> attach;
  std::vector<std::vector<int>> copy_map;

  Graph core() const;
};

GPhi build_G_phi(const CnfFormula& phi, const WbisWeights& w, const Budget& budget = default_budget());

// Z(G_phi) from the core with each attached copy folded into its cut vertex.
std::uint64_t z_G_phi_cut_vertex(const GPhi& gphi, const Budget& budget = default_budget());

// Weighted sums of the partition classes S_0..S_{2n+m}, by flat enumeration.
std::vector<std::uint64_t> partition_class_sums(const GPhi& gphi, const Budget& budget = default_budget());

struct SatReductionReport {
  std::uint64_t lhs = 0;
  std::uint64_t K = 0;
  std::uint64_t sat = 0;
  std::uint64_t rhs = 0;
  bool ok = false;
  int vertices = 0;
  std::string gadget_case;
  // Direct evaluation of Z(G_phi) when small enough.
  std::optional<std::uint64_t> direct;
  std::string direct_method;
};

SatReductionReport verify_sat_reduction(const CnfFormula& phi, const WbisWeights& w, int direct_max_vertices = 64,
                                        const Budget& budget = default_budget());

}  // namespace modhom
