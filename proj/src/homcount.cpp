#include "modhom/homcount.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

void check_pins(const std::map<int, int>& pins, int g_n, int h_n) {
  for (auto [v, t] : pins) {
    if (v < 0 || v >= g_n) throw InputError("pinned vertex " + std::to_string(v + 1) + " out of range");
    if (t < 0 || t >= h_n) throw InputError("pin target " + std::to_string(t + 1) + " out of range");
  }
}

// Pinned vertices first, then repeatedly the vertex with most already-ordered
// neighbours (ties: higher degree, lower id).
std::vector<int> search_order(const Graph& g, const std::map<int, int>& pins) {
  const int n = g.n();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::vector<int> links(n, 0);
  auto place = [&](int v) {
    order.push_back(v);
    placed[v] = 1;
    for (int w : g.neighbors(v)) ++links[w];
  };
  for (auto [v, t] : pins) place(v);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || links[v] > links[best] || (links[v] == links[best] && g.degree(v) > g.degree(best))) best = v;
    }
    place(best);
  }
  return order;
}

void charge(std::uint64_t& states, const Budget& budget) {
  if (++states > budget.enumeration_states) {
    throw BudgetExceeded("homomorphism enumeration exceeded " + std::to_string(budget.enumeration_states) + " states");
  }
}

class HomSearch {
 public:
  HomSearch(const Graph& g, const Graph& h, const std::map<int, int>& pins, const Budget& budget)
      : g_(g), h_(h), budget_(budget), order_(search_order(g, pins)), pin_of_(g.n(), -1), sigma_(g.n(), -1) {
    if (h.n() > 64) throw BudgetExceeded("target graphs are limited to 64 vertices");
    for (auto [v, t] : pins) pin_of_[v] = t;
    const int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order_[i]] = i;
    back_.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int w : g.neighbors(order_[i]))
        if (pos[w] < i) back_[i].push_back(w);
    // Longest suffix of pairwise non-adjacent vertices: counted by a product.
    independent_from_ = n;
    for (int i = n - 1; i >= 0; --i) {
      bool clash = std::any_of(g.neighbors(order_[i]).begin(), g.neighbors(order_[i]).end(),
                               [&](int w) { return pos[w] > i; });
      if (clash) break;
      independent_from_ = i;
    }
    full_ = h.n() == 64 ? ~0ULL : ((1ULL << h.n()) - 1);
  }

  std::uint64_t count_mod(std::uint64_t p) {
    p_ = p;
    acc_mod_ = 0;
    count_rec(0, false);
    return acc_mod_;
  }

  BigInt count_exact() {
    acc_small_ = 0;
    acc_big_ = 0;
    count_rec(0, true);
    return acc_big_ + to_big(acc_small_);
  }

  void enumerate(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    enum_rec(0);
  }

 private:
  std::uint64_t candidates(int i) const {
    int v = order_[i];
    std::uint64_t c = pin_of_[v] >= 0 ? (1ULL << pin_of_[v]) : full_;
    for (int u : back_[i]) c &= h_.neighbor_mask(sigma_[u]);
    return c;
  }

  void count_rec(int i, bool exact) {
    charge(states_, budget_);
    if (i >= independent_from_) {
      add_leaf(i, exact);
      return;
    }
    int v = order_[i];
    for (std::uint64_t c = candidates(i); c; c &= c - 1) {
      sigma_[v] = std::countr_zero(c);
      count_rec(i + 1, exact);
    }
    sigma_[v] = -1;
  }

  void add_leaf(int from, bool exact) {
    const int n = g_.n();
    if (!exact) {
      std::uint64_t prod = 1 % p_;
      for (int i = from; i < n && prod; ++i) prod = prod * (std::popcount(candidates(i)) % p_) % p_;
      acc_mod_ = (acc_mod_ + prod) % p_;
      return;
    }
    std::uint64_t prod = 1;
    bool overflow = false;
    for (int i = from; i < n; ++i) {
      std::uint64_t f = std::popcount(candidates(i));
      if (f == 0) return;
      if (__builtin_mul_overflow(prod, f, &prod)) {
        overflow = true;
        break;
      }
    }
    if (overflow) {
      BigInt big = 1;
      for (int i = from; i < n; ++i) big *= std::popcount(candidates(i));
      acc_big_ += big;
      return;
    }
    if (acc_small_ > std::numeric_limits<u128>::max() - prod) {
      acc_big_ += to_big(acc_small_);
      acc_small_ = 0;
    }
    acc_small_ += prod;
  }

  bool enum_rec(int i) {
    charge(states_, budget_);
    if (i == g_.n()) return (*visit_)(sigma_);
    int v = order_[i];
    for (std::uint64_t c = candidates(i); c; c &= c - 1) {
      sigma_[v] = std::countr_zero(c);
      if (!enum_rec(i + 1)) return false;
    }
    sigma_[v] = -1;
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  const Budget& budget_;
  std::vector<int> order_;
  std::vector<int> pin_of_;
  std::vector<int> sigma_;
  std::vector<std::vector<int>> back_;
  int independent_from_ = 0;
  std::uint64_t full_ = 0;
  std::uint64_t states_ = 0;
  std::uint64_t p_ = 1;
  std::uint64_t acc_mod_ = 0;
  u128 acc_small_ = 0;
  BigInt acc_big_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

HomCount count_homs(const PartiallyLabelledGraph& j, const Graph& h, std::optional<std::uint64_t> p,
                    const Budget& budget) {
  check_pins(j.pins, j.base.n(), h.n());
  HomCount out;
  if (h.n() == 0) {
    // Only the empty graph maps into the empty graph.
    int c = j.base.n() == 0 ? 1 : 0;
    if (p) out.residue = ZpScalar(c, *p);
    else out.exact = BigInt(c);
    return out;
  }
  HomSearch search(j.base, h, j.pins, budget);
  if (p) {
    require_prime(*p);
    out.residue = ZpScalar(static_cast<long long>(search.count_mod(*p)), *p);
  } else {
    out.exact = search.count_exact();
  }
  return out;
}

HomCount count_homs(const Graph& g, const Graph& h, std::optional<std::uint64_t> p, const Budget& budget) {
  return count_homs(PartiallyLabelledGraph{g, {}}, h, p, budget);
}

std::uint64_t count_homs_mod(const Graph& g, const std::vector<int>& marks, const std::vector<int>& targets,
                             const Graph& h, std::uint64_t p, const Budget& budget) {
  if (marks.size() != targets.size()) throw InputError("marks and targets differ in length");
  std::map<int, int> pins;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    auto [it, fresh] = pins.emplace(marks[i], targets[i]);
    if (!fresh && it->second != targets[i]) return 0;
  }
  return count_homs(PartiallyLabelledGraph{g, std::move(pins)}, h, p, budget).residue->value();
}

void for_each_hom(const PartiallyLabelledGraph& j, const Graph& h,
                  const std::function<bool(const std::vector<int>&)>& visit, const Budget& budget) {
  check_pins(j.pins, j.base.n(), h.n());
  if (h.n() == 0) {
    if (j.base.n() == 0) visit({});
    return;
  }
  HomSearch(j.base, h, j.pins, budget).enumerate(visit);
}

BigInt count_walks(const Graph& h, int x, int y, int k) {
  if (x < 0 || x >= h.n() || y < 0 || y >= h.n()) throw InputError("walk endpoint out of range");
  if (k < 0) throw InputError("negative walk length");
  std::vector<BigInt> row(h.n(), 0);
  row[x] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(h.n(), 0);
    for (int a = 0; a < h.n(); ++a) {
      if (row[a] == 0) continue;
      for (int b : h.neighbors(a)) next[b] += row[a];
    }
    row.swap(next);
  }
  return row[y];
}

std::vector<std::vector<BigInt>> walk_matrix(const Graph& h, int k) {
  const int n = h.n();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < n; ++a)
        for (int b : h.neighbors(a)) next[i][b] += m[i][a];
    m.swap(next);
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> walk_matrix_mod(const Graph& h, int k, std::uint64_t p) {
  auto exact = walk_matrix(h, k);
  std::vector<std::vector<std::uint64_t>> out(h.n(), std::vector<std::uint64_t>(h.n()));
  for (int i = 0; i < h.n(); ++i)
    for (int j = 0; j < h.n(); ++j) out[i][j] = static_cast<std::uint64_t>(exact[i][j] % p);
  return out;
}

Skeleton Skeleton::make(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<Edge> es;
  std::map<Edge, int> len;
  for (auto [u, v, l] : edges) {
    if (l < 1) throw InputError("skeleton edge lengths must be at least 1");
    es.emplace_back(u, v);
    len[{std::min(u, v), std::max(u, v)}] = l;
  }
  Skeleton s{Graph(n, es), {}};
  for (const auto& e : s.graph.edges()) s.lengths.push_back(len.at(e));
  return s;
}

Graph expand_skeleton(const Skeleton& s) {
  int next = s.graph.n();
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.graph.edges().size(); ++i) {
    auto [u, v] = s.graph.edges()[i];
    int prev = u;
    for (int step = 1; step < s.lengths[i]; ++step) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, v);
  }
  return Graph(next, es);
}

ZpScalar count_homs_subdivided(const Skeleton& skeleton, const std::map<int, int>& pins, const Graph& h,
                               std::uint64_t p, const Budget& budget) {
  const Graph& g = skeleton.graph;
  if (skeleton.lengths.size() != g.m()) throw InputError("one length per skeleton edge required");
  check_pins(pins, g.n(), h.n());
  require_prime(p);
  int free = g.n() - static_cast<int>(pins.size());
  if (free > budget.skeleton_max_free) {
    throw BudgetExceeded("subdivided counting limited to " + std::to_string(budget.skeleton_max_free) +
                         " free skeleton vertices, got " + std::to_string(free));
  }
  if (h.n() == 0) return ZpScalar(g.n() == 0 ? 1 : 0, p);

  std::map<int, std::vector<std::vector<std::uint64_t>>> walks;
  for (int l : skeleton.lengths)
    if (!walks.count(l)) walks[l] = walk_matrix_mod(h, l, p);

  std::vector<int> order = search_order(g, pins);
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  // For each position, edges to earlier vertices: (earlier vertex, walk matrix).
  std::vector<std::vector<std::pair<int, const std::vector<std::vector<std::uint64_t>>*>>> back(g.n());
  for (std::size_t e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    const auto* w = &walks.at(skeleton.lengths[e]);
    if (pos[u] < pos[v]) back[pos[v]].emplace_back(u, w);
    else back[pos[u]].emplace_back(v, w);
  }

  std::vector<int> sigma(g.n(), -1);
  std::uint64_t states = 0, total = 0;
  std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t acc) {
    charge(states, budget);
    if (i == g.n()) {
      total = mod_add(total, acc, p);
      return;
    }
    int v = order[i];
    auto pin = pins.find(v);
    int lo = pin == pins.end() ? 0 : pin->second;
    int hi = pin == pins.end() ? h.n() : pin->second + 1;
    for (int x = lo; x < hi; ++x) {
      std::uint64_t f = acc;
      for (auto [u, w] : back[i]) {
        f = f * (*w)[sigma[u]][x] % p;
        if (f == 0) break;
      }
      if (f == 0) continue;
      sigma[v] = x;
      rec(i + 1, f);
    }
    sigma[v] = -1;
  };
  rec(0, 1 % p);
  return ZpScalar(static_cast<long long>(total), p);
}

}  // namespace modhom
