#pragma once

// Weighted independent-set sums over graphs with at most 64 vertices.
// Each vertex v contributes out[v] when absent from the set and in[v] when
// present; the plain partition function is out = 1, in = lambda.

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "modhom/errors.hpp"
#include "modhom/homcount.hpp"

namespace modhom::detail {

struct ModRing {
  std::uint64_t p;
  using V = std::uint64_t;
  V one() const { return 1 % p; }
  V add(V a, V b) const { return mod_add(a, b, p); }
  V mul(V a, V b) const { return a * b % p; }
};

struct ExactRing {
  using V = BigInt;
  V one() const { return 1; }
  V add(const V& a, const V& b) const { return a + b; }
  V mul(const V& a, const V& b) const { return a * b; }
};

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.n() > 64) throw BudgetExceeded("independent-set evaluation limited to 64 vertices");
  std::vector<std::uint64_t> adj(g.n());
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

inline void charge_states(std::uint64_t& states, std::uint64_t limit) {
  if (++states > limit) {
    throw BudgetExceeded("independent-set enumeration exceeded " + std::to_string(limit) + " states");
  }
}

// Visit every independent set (as a bitmask) in a fixed recursion order.
template <class F>
void for_each_independent_set(const std::vector<std::uint64_t>& adj, std::uint64_t limit, F&& visit) {
  const int n = static_cast<int>(adj.size());
  std::uint64_t states = 0;
  auto rec = [&](auto&& self, int v, std::uint64_t set, std::uint64_t blocked) -> void {
    charge_states(states, limit);
    if (v == n) {
      visit(set);
      return;
    }
    self(self, v + 1, set, blocked);
    if (!(blocked >> v & 1)) self(self, v + 1, set | (1ULL << v), blocked | adj[v]);
  };
  rec(rec, 0, 0, 0);
}

template <class Ring>
typename Ring::V is_sum_flat(const std::vector<std::uint64_t>& adj, const std::vector<typename Ring::V>& out,
                             const std::vector<typename Ring::V>& in, const Ring& ring, std::uint64_t limit) {
  using V = typename Ring::V;
  const int n = static_cast<int>(adj.size());
  std::uint64_t states = 0;
  V total{};
  auto rec = [&](auto&& self, int v, std::uint64_t blocked, const V& acc) -> void {
    charge_states(states, limit);
    if (v == n) {
      total = ring.add(total, acc);
      return;
    }
    self(self, v + 1, blocked, ring.mul(acc, out[v]));
    if (!(blocked >> v & 1)) self(self, v + 1, blocked | adj[v], ring.mul(acc, in[v]));
  };
  rec(rec, 0, 0, ring.one());
  return total;
}

// Branch on a maximum-degree vertex, splitting into connected components.
template <class Ring>
class BranchingSum {
 public:
  using V = typename Ring::V;

  BranchingSum(std::vector<std::uint64_t> adj, std::vector<V> out, std::vector<V> in, Ring ring, std::uint64_t limit)
      : adj_(std::move(adj)), out_(std::move(out)), in_(std::move(in)), ring_(ring), limit_(limit) {}

  V run() {
    const int n = static_cast<int>(adj_.size());
    std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    return eval(all);
  }

 private:
  std::uint64_t component_of(std::uint64_t mask) const {
    std::uint64_t comp = mask & (~mask + 1), frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  V eval(std::uint64_t mask) {
    charge_states(states_, limit_);
    if (mask == 0) return ring_.one();
    auto hit = memo_.find(mask);
    if (hit != memo_.end()) return hit->second;
    V result;
    std::uint64_t comp = component_of(mask);
    if (comp != mask) {
      result = ring_.mul(eval(comp), eval(mask & ~comp));
    } else {
      int best = -1, best_deg = -1;
      for (std::uint64_t f = mask; f; f &= f - 1) {
        int v = std::countr_zero(f);
        int d = std::popcount(adj_[v] & mask);
        if (d > best_deg) best = v, best_deg = d;
      }
      if (best_deg == 0) {
        result = ring_.add(out_[best], in_[best]);
      } else {
        std::uint64_t nb = adj_[best] & mask;
        V with = in_[best];
        for (std::uint64_t f = nb; f; f &= f - 1) with = ring_.mul(with, out_[std::countr_zero(f)]);
        result = ring_.add(ring_.mul(out_[best], eval(mask & ~(1ULL << best))),
                           ring_.mul(with, eval(mask & ~nb & ~(1ULL << best))));
      }
    }
    memo_.emplace(mask, result);
    return result;
  }

  std::vector<std::uint64_t> adj_;
  std::vector<V> out_;
  std::vector<V> in_;
  Ring ring_;
  std::uint64_t limit_;
  std::uint64_t states_ = 0;
  std::unordered_map<std::uint64_t, V> memo_;
};

}  // namespace modhom::detail
