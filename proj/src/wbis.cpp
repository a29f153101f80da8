#include "modhom/wbis.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "indset.hpp"
#include "modhom/errors.hpp"

namespace modhom {

using detail::BranchingSum;
using detail::ExactRing;
using detail::ModRing;

WbisWeights WbisWeights::make(long long lambda_l, long long lambda_r, std::uint64_t p) {
  require_prime(p);
  return {mod_reduce(lambda_l, p), mod_reduce(lambda_r, p), p};
}

namespace {

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> plain_weights(const BipartiteGraph& g,
                                                                                 const WbisWeights& w) {
  std::vector<std::uint64_t> out(g.n(), 1 % w.p), in(g.n());
  for (int v = 0; v < g.n(); ++v) in[v] = g.is_left(v) ? w.lambda_l : w.lambda_r;
  return {out, in};
}

std::uint64_t side_count(const BipartiteGraph& g, bool left) {
  std::uint64_t c = 0;
  for (int v = 0; v < g.n(); ++v) c += g.is_left(v) == left;
  return c;
}

}  // namespace

std::uint64_t z_wbis_flat(const BipartiteGraph& g, const WbisWeights& w, const Budget& budget) {
  auto [out, in] = plain_weights(g, w);
  return detail::is_sum_flat(detail::adjacency_masks(g.graph()), out, in, ModRing{w.p}, budget.enumeration_states);
}

std::uint64_t z_wbis_branching(const BipartiteGraph& g, const WbisWeights& w, const Budget& budget) {
  auto [out, in] = plain_weights(g, w);
  return BranchingSum<ModRing>(detail::adjacency_masks(g.graph()), out, in, ModRing{w.p}, budget.enumeration_states)
      .run();
}

ZpScalar z_wbis(const BipartiteGraph& g, const WbisWeights& w, const Budget& budget) {
  require_prime(w.p);
  const std::uint64_t p = w.p;
  if (w.lambda_l % p == 0) {
    return ZpScalar(static_cast<long long>(mod_pow(w.lambda_r + 1, side_count(g, false), p)), p);
  }
  if (w.lambda_r % p == 0) {
    return ZpScalar(static_cast<long long>(mod_pow(w.lambda_l + 1, side_count(g, true), p)), p);
  }
  if (g.n() <= budget.wbis_flat_max) return ZpScalar(static_cast<long long>(z_wbis_flat(g, w, budget)), p);
  if (g.n() <= budget.wbis_branch_max) return ZpScalar(static_cast<long long>(z_wbis_branching(g, w, budget)), p);
  throw BudgetExceeded("weighted independent-set evaluation limited to " + std::to_string(budget.wbis_branch_max) +
                       " vertices, got " + std::to_string(g.n()));
}

BigInt z_wbis_exact(const BipartiteGraph& g, long long lambda_l, long long lambda_r, const Budget& budget) {
  std::vector<BigInt> out(g.n(), 1), in(g.n());
  for (int v = 0; v < g.n(); ++v) in[v] = g.is_left(v) ? lambda_l : lambda_r;
  return BranchingSum<ExactRing>(detail::adjacency_masks(g.graph()), out, in, ExactRing{}, budget.enumeration_states)
      .run();
}

BigInt count_independent_sets(const Graph& g, const Budget& budget) {
  std::vector<BigInt> ones(g.n(), 1);
  return BranchingSum<ExactRing>(detail::adjacency_masks(g), ones, ones, ExactRing{}, budget.enumeration_states).run();
}

namespace {

// Buckets the weighted sum by which sides the set meets.
template <class Ring>
std::array<typename Ring::V, 4> side_buckets(const BipartiteGraph& g, const typename Ring::V& ll,
                                             const typename Ring::V& lr, const Ring& ring, const Budget& budget) {
  using V = typename Ring::V;
  std::uint64_t left_mask = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.is_left(v)) left_mask |= 1ULL << v;
  std::vector<V> pow_l{ring.one()}, pow_r{ring.one()};
  for (int i = 0; i < g.n(); ++i) {
    pow_l.push_back(ring.mul(pow_l.back(), ll));
    pow_r.push_back(ring.mul(pow_r.back(), lr));
  }
  std::array<V, 4> buckets{};
  detail::for_each_independent_set(detail::adjacency_masks(g.graph()), budget.enumeration_states,
                                   [&](std::uint64_t set) {
                                     int a = std::popcount(set & left_mask), b = std::popcount(set & ~left_mask);
                                     int idx = (a > 0 ? 1 : 0) | (b > 0 ? 2 : 0);
                                     buckets[idx] = ring.add(buckets[idx], ring.mul(pow_l[a], pow_r[b]));
                                   });
  return buckets;
}

}  // namespace

SplitSum<std::uint64_t> split_sum_report(const BipartiteGraph& g, const WbisWeights& w, const Budget& budget) {
  require_prime(w.p);
  const std::uint64_t p = w.p;
  auto buckets = side_buckets(g, w.lambda_l, w.lambda_r, ModRing{p}, budget);
  SplitSum<std::uint64_t> s;
  s.left_only = mod_sub(mod_pow(w.lambda_l + 1, side_count(g, true), p), 1 % p, p);
  s.right_only = mod_sub(mod_pow(w.lambda_r + 1, side_count(g, false), p), 1 % p, p);
  s.mixed = buckets[3];
  s.total = mod_add(mod_add(1 % p, s.left_only, p), mod_add(s.right_only, s.mixed, p), p);
  return s;
}

SplitSum<BigInt> split_sum_exact(const BipartiteGraph& g, long long lambda_l, long long lambda_r,
                                 const Budget& budget) {
  auto buckets = side_buckets(g, BigInt(lambda_l), BigInt(lambda_r), ExactRing{}, budget);
  SplitSum<BigInt> s;
  s.left_only = boost::multiprecision::pow(BigInt(lambda_l + 1), static_cast<unsigned>(side_count(g, true))) - 1;
  s.right_only = boost::multiprecision::pow(BigInt(lambda_r + 1), static_cast<unsigned>(side_count(g, false))) - 1;
  s.mixed = buckets[3];
  s.total = 1 + s.left_only + s.right_only + s.mixed;
  return s;
}

std::vector<std::vector<int>> mixed_independent_sets(const BipartiteGraph& g, const Budget& budget) {
  std::uint64_t left_mask = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.is_left(v)) left_mask |= 1ULL << v;
  std::vector<std::vector<int>> out;
  detail::for_each_independent_set(detail::adjacency_masks(g.graph()), budget.enumeration_states,
                                   [&](std::uint64_t set) {
                                     if (!(set & left_mask) || !(set & ~left_mask)) return;
                                     std::vector<int> vs;
                                     for (std::uint64_t f = set; f; f &= f - 1) vs.push_back(std::countr_zero(f));
                                     out.push_back(std::move(vs));
                                   });
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteGraph remove_vertices(const BipartiteGraph& g, const std::vector<int>& drop) {
  std::vector<char> gone(g.n(), 0);
  for (int v : drop) gone[v] = 1;
  std::vector<int> keep;
  std::vector<bool> sides;
  for (int v = 0; v < g.n(); ++v) {
    if (gone[v]) continue;
    keep.push_back(v);
    sides.push_back(g.is_left(v));
  }
  return BipartiteGraph(g.graph().induced(keep), sides);
}

BGraph build_B(int k, std::uint64_t p) {
  require_prime(p);
  if (k < 1 || static_cast<std::uint64_t>(k) > p) throw InputError("B(k,p) needs 1 <= k <= p");
  BGraph b;
  b.k = k;
  b.p = p;
  const int h = b.half();
  std::vector<Edge> es;
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j)
      if (i != j || i > k) es.emplace_back(b.u(i), b.v(j));
  std::vector<bool> sides(2 * h, false);
  for (int i = 1; i <= h; ++i) sides[b.u(i)] = true;
  b.graph = BipartiteGraph(Graph(2 * h, es), sides);
  return b;
}

std::uint64_t z_B_closed_form(int k, const WbisWeights& w, int removed_left, int removed_right) {
  const std::uint64_t p = w.p;
  const int h = 2 * static_cast<int>(p - 1);
  int nl = h - (removed_left > 0 ? 1 : 0), nr = h - (removed_right > 0 ? 1 : 0);
  // Mixed sets are exactly the surviving non-edges {u_i, v_i}, i <= k.
  int pairs = 0;
  for (int i = 1; i <= k; ++i) pairs += (i != removed_left && i != removed_right);
  std::uint64_t z = mod_add(mod_pow(w.lambda_l + 1, nl, p), mod_pow(w.lambda_r + 1, nr, p), p);
  z = mod_sub(z, 1 % p, p);
  return mod_add(z, mod_mul(static_cast<std::uint64_t>(pairs) % p, mod_mul(w.lambda_l, w.lambda_r, p), p), p);
}

BGadget select_gadget(const WbisWeights& w, const Budget& budget) {
  require_prime(w.p);
  const std::uint64_t p = w.p;
  if (w.lambda_l % p == 0 || w.lambda_r % p == 0) throw InputError("gadget needs nonzero weights");
  const std::uint64_t minus_one = p - 1;
  const int h = 2 * static_cast<int>(p - 1);
  bool l_neg = w.lambda_l == minus_one, r_neg = w.lambda_r == minus_one;

  int k, left_index, right_index;
  std::string label;
  if (!l_neg && !r_neg) {
    label = "i";
    k = static_cast<int>(mod_sub(0, mod_inv(mod_mul(w.lambda_l, w.lambda_r, p), p), p));
    left_index = h;
    right_index = h;
  } else if (l_neg && !r_neg) {
    label = "ii";
    k = static_cast<int>(p);
    left_index = k;
    right_index = h;
  } else if (!l_neg && r_neg) {
    label = "iii";
    k = static_cast<int>(p);
    left_index = h;
    right_index = k;
  } else {
    label = "iv";
    k = 1;
    left_index = k;
    right_index = k;
  }

  BGadget gad;
  gad.b = build_B(k, p);
  gad.weights = w;
  gad.case_label = label;
  gad.u_L = gad.b.u(left_index);
  gad.v_R = gad.b.v(right_index);
  const BipartiteGraph& bg = gad.b.graph;
  if (p <= 5) {
    gad.verified_by = "flat";
    gad.z_b = z_wbis_flat(bg, w, budget);
    gad.z_minus_uL = z_wbis_flat(remove_vertices(bg, {gad.u_L}), w, budget);
    gad.z_minus_vR = z_wbis_flat(remove_vertices(bg, {gad.v_R}), w, budget);
  } else {
    gad.verified_by = "closed-form";
    gad.z_b = z_B_closed_form(k, w, -1, -1);
    gad.z_minus_uL = z_B_closed_form(k, w, left_index, -1);
    gad.z_minus_vR = z_B_closed_form(k, w, -1, right_index);
  }
  if (gad.z_b != 0 || gad.z_minus_uL == 0 || gad.z_minus_vR == 0) {
    throw InternalError("gadget for case " + label + " failed its congruence checks");
  }
  auto closed = [&](int x) {
    std::vector<int> drop{x};
    for (int y : bg.graph().neighbors(x)) drop.push_back(y);
    return z_wbis(remove_vertices(bg, drop), w, budget).value();
  };
  gad.z_minus_closed_uL = closed(gad.u_L);
  gad.z_minus_closed_vR = closed(gad.v_R);
  return gad;
}

Graph GPhi::core() const {
  std::vector<int> keep(core_size);
  for (int i = 0; i < core_size; ++i) keep[i] = i;
  return graph.graph().induced(keep);
}

GPhi build_G_phi(const CnfFormula& phi, const WbisWeights& w, const Budget& budget) {
  phi.validate();
  GPhi out;
  out.gadget = select_gadget(w, budget);
  const int n = phi.n, m = static_cast<int>(phi.clauses.size());
  out.n_vars = n;
  out.m_clauses = m;
  out.core_size = 6 * n + m;

  std::vector<bool> sides(out.core_size, false);
  std::set<Edge> es;
  auto link = [&](int a, int b) { es.insert({std::min(a, b), std::max(a, b)}); };
  for (int i = 0; i < n; ++i) {
    std::array<int, 6> ids;
    for (int t = 0; t < 6; ++t) ids[t] = 6 * i + t;
    auto [u, ubar, wv, v, vbar, z] = ids;
    sides[u] = sides[ubar] = sides[wv] = true;
    link(u, v);
    link(v, wv);
    link(wv, vbar);
    link(vbar, ubar);
    link(ubar, z);
    link(z, u);
    out.var_ids.push_back(ids);
  }
  for (int j = 0; j < m; ++j) {
    int y = 6 * n + j;
    out.clause_ids.push_back(y);
    for (int lit : phi.clauses[j]) {
      const auto& ids = out.var_ids[std::abs(lit) - 1];
      link(lit > 0 ? ids[0] : ids[1], y);
    }
  }

  const BGraph& b = out.gadget.b;
  int next = out.core_size;
  for (int c = 0; c < 2 * n + m; ++c) {
    int attach, identified;
    if (c < n) {
      attach = out.var_ids[c][2];
      identified = out.gadget.u_L;
    } else if (c < 2 * n) {
      attach = out.var_ids[c - n][5];
      identified = out.gadget.v_R;
    } else {
      attach = out.clause_ids[c - 2 * n];
      identified = out.gadget.v_R;
    }
    std::vector<int> map(b.graph.n());
    for (int x = 0; x < b.graph.n(); ++x) {
      if (x == identified) {
        map[x] = attach;
      } else {
        map[x] = next++;
        sides.push_back(b.graph.is_left(x));
      }
    }
    for (auto [x, y] : b.graph.graph().edges()) link(map[x], map[y]);
    out.attach.push_back(attach);
    out.copy_map.push_back(std::move(map));
  }
  out.graph = BipartiteGraph(Graph(next, {es.begin(), es.end()}), sides);
  return out;
}

std::uint64_t z_G_phi_cut_vertex(const GPhi& gphi, const Budget& budget) {
  const WbisWeights& w = gphi.gadget.weights;
  const std::uint64_t p = w.p;
  std::vector<std::uint64_t> out(gphi.core_size, 1 % p), in(gphi.core_size);
  for (int v = 0; v < gphi.core_size; ++v) in[v] = gphi.graph.is_left(v) ? w.lambda_l : w.lambda_r;
  for (std::size_t c = 0; c < gphi.attach.size(); ++c) {
    int x = gphi.attach[c];
    bool via_left = static_cast<int>(c) < gphi.n_vars;
    out[x] = via_left ? gphi.gadget.z_minus_uL : gphi.gadget.z_minus_vR;
    in[x] = mod_mul(in[x], via_left ? gphi.gadget.z_minus_closed_uL : gphi.gadget.z_minus_closed_vR, p);
  }
  return BranchingSum<ModRing>(detail::adjacency_masks(gphi.core()), out, in, ModRing{p}, budget.enumeration_states)
      .run();
}

std::vector<std::uint64_t> partition_class_sums(const GPhi& gphi, const Budget& budget) {
  const WbisWeights& w = gphi.gadget.weights;
  const std::uint64_t p = w.p;
  const Graph core = gphi.core();
  // Class j >= 1 is the first attach vertex whose core neighbourhood misses the set.
  std::vector<std::uint64_t> guards;
  for (int x : gphi.attach) guards.push_back(core.neighbor_mask(x));
  std::uint64_t core_mask = gphi.core_size == 64 ? ~0ULL : (1ULL << gphi.core_size) - 1;
  std::uint64_t left_mask = 0;
  for (int v = 0; v < gphi.graph.n(); ++v)
    if (gphi.graph.is_left(v)) left_mask |= 1ULL << v;

  std::vector<std::uint64_t> sums(guards.size() + 1, 0);
  detail::for_each_independent_set(detail::adjacency_masks(gphi.graph.graph()), budget.enumeration_states,
                                   [&](std::uint64_t set) {
                                     std::uint64_t in_core = set & core_mask;
                                     std::size_t cls = 0;
                                     for (std::size_t j = 0; j < guards.size(); ++j) {
                                       if (!(guards[j] & in_core)) {
                                         cls = j + 1;
                                         break;
                                       }
                                     }
                                     std::uint64_t wt = mod_mul(mod_pow(w.lambda_l, std::popcount(set & left_mask), p),
                                                                mod_pow(w.lambda_r, std::popcount(set & ~left_mask), p), p);
                                     sums[cls] = mod_add(sums[cls], wt, p);
                                   });
  return sums;
}

SatReductionReport verify_sat_reduction(const CnfFormula& phi, const WbisWeights& w, int direct_max_vertices,
                                        const Budget& budget) {
  GPhi gphi = build_G_phi(phi, w, budget);
  const std::uint64_t p = w.p;
  SatReductionReport rep;
  rep.vertices = gphi.graph.n();
  rep.gadget_case = gphi.gadget.case_label;
  rep.lhs = z_G_phi_cut_vertex(gphi, budget);
  const std::uint64_t n = phi.n, m = phi.clauses.size();
  rep.K = mod_mul(mod_pow(mod_mul(w.lambda_l, w.lambda_r, p), n, p),
                  mod_mul(mod_pow(gphi.gadget.z_minus_uL, n, p), mod_pow(gphi.gadget.z_minus_vR, n + m, p), p), p);
  rep.sat = count_sat(phi, budget);
  rep.rhs = mod_mul(rep.K, rep.sat % p, p);
  rep.ok = rep.lhs == rep.rhs;
  if (rep.vertices <= direct_max_vertices && rep.vertices <= 64) {
    try {
      if (rep.vertices <= budget.wbis_flat_max) {
        rep.direct = z_wbis_flat(gphi.graph, w, budget);
        rep.direct_method = "flat";
      } else {
        rep.direct = z_wbis_branching(gphi.graph, w, budget);
        rep.direct_method = "branching";
      }
      rep.ok = rep.ok && *rep.direct == rep.lhs;
    } catch (const BudgetExceeded&) {
      rep.direct.reset();
      rep.direct_method = "skipped";
    }
  }
  return rep;
}

}  // namespace modhom
