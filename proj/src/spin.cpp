#include "modhom/spin.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "modhom/errors.hpp"

namespace modhom {

SpinParams SpinParams::make(long long gamma, long long lambda, std::uint64_t p) {
  require_prime(p);
  return {mod_reduce(gamma, p), mod_reduce(lambda, p), p};
}

namespace {

// Gray-code walk over the free vertices, tracking 1-1 edge and 0-vertex counts.
std::uint64_t spin_sum(const PinnedSpinGraph& j, const SpinParams& sp, bool weight_ones, const Budget& budget) {
  require_prime(sp.p);
  const Multigraph& g = j.graph;
  const int n = g.n();
  const std::uint64_t p = sp.p;
  std::vector<int> spin(n, 0);
  std::vector<int> free;
  for (auto [v, s] : j.pins) {
    if (v < 0 || v >= n) throw InputError("pinned vertex out of range");
    if (s != 0 && s != 1) throw InputError("spin pins must be 0 or 1");
  }
  for (int v = 0; v < n; ++v) {
    auto it = j.pins.find(v);
    if (it == j.pins.end()) free.push_back(v);
    else spin[v] = it->second;
  }
  if (static_cast<int>(free.size()) > budget.spin_max_free) {
    throw BudgetExceeded("spin evaluation limited to " + std::to_string(budget.spin_max_free) + " free vertices");
  }

  std::vector<std::vector<std::pair<int, int>>> incident(n);
  std::vector<int> loops(n, 0);
  for (const auto& b : g.bundles()) {
    if (b.u == b.v) {
      loops[b.u] += b.multiplicity;
    } else {
      incident[b.u].emplace_back(b.v, b.multiplicity);
      incident[b.v].emplace_back(b.u, b.multiplicity);
    }
  }
  std::vector<std::uint64_t> gpow(g.edge_count() + 1), lpow(n + 1);
  gpow[0] = lpow[0] = 1 % p;
  for (std::size_t i = 1; i < gpow.size(); ++i) gpow[i] = gpow[i - 1] * sp.gamma % p;
  for (std::size_t i = 1; i < lpow.size(); ++i) lpow[i] = lpow[i - 1] * sp.lambda % p;

  std::size_t ones_edges = 0;
  int zeros = 0;
  for (const auto& b : g.bundles())
    if (spin[b.u] == 1 && spin[b.v] == 1) ones_edges += b.multiplicity;
  for (int v = 0; v < n; ++v) zeros += spin[v] == 0;

  auto weight = [&]() { return gpow[ones_edges] * lpow[weight_ones ? n - zeros : zeros] % p; };
  std::uint64_t total = weight();
  const std::uint64_t steps = 1ULL << free.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    int v = free[std::countr_zero(i)];
    std::size_t delta = loops[v];
    for (auto [w, mult] : incident[v])
      if (spin[w] == 1) delta += mult;
    if (spin[v] == 0) {
      spin[v] = 1;
      --zeros;
      ones_edges += delta;
    } else {
      spin[v] = 0;
      ++zeros;
      ones_edges -= delta;
    }
    total = mod_add(total, weight(), p);
  }
  return total;
}

}  // namespace

ZpScalar z_spin(const PinnedSpinGraph& j, const SpinParams& sp, const Budget& budget) {
  return ZpScalar(static_cast<long long>(spin_sum(j, sp, false, budget)), sp.p);
}

ZpScalar z_spin_ones(const PinnedSpinGraph& j, const SpinParams& sp, const Budget& budget) {
  return ZpScalar(static_cast<long long>(spin_sum(j, sp, true, budget)), sp.p);
}

bool dual_check(const Multigraph& g, const SpinParams& sp, const Budget& budget) {
  if (sp.lambda % sp.p == 0) throw InputError("duality needs an invertible lambda");
  std::uint64_t inv = mod_inv(sp.lambda, sp.p);
  std::uint64_t lhs = mod_mul(mod_pow(inv, g.n(), sp.p), z_spin({g, {}}, sp, budget).value(), sp.p);
  SpinParams flipped{sp.gamma, inv, sp.p};
  return lhs == z_spin_ones({g, {}}, flipped, budget).value();
}

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::parallel:
      return "parallel";
    case ComponentKind::clique:
      return "clique";
    case ComponentKind::p2:
      return "p2";
    case ComponentKind::p3:
      return "p3";
  }
  return "?";
}

ComponentKind component_kind_from_string(const std::string& name) {
  if (name == "parallel") return ComponentKind::parallel;
  if (name == "clique") return ComponentKind::clique;
  if (name == "p2") return ComponentKind::p2;
  if (name == "p3") return ComponentKind::p3;
  throw InputError("unknown component kind '" + name + "'");
}

namespace {

// (A, B) with halves (lambda * A, B).
std::pair<std::uint64_t, std::uint64_t> component_factors(ComponentKind kind, int size, const SpinParams& sp) {
  const std::uint64_t p = sp.p, g = sp.gamma, l = sp.lambda;
  auto mul = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
  auto add = [p](std::initializer_list<std::uint64_t> xs) {
    std::uint64_t s = 0;
    for (auto x : xs) s = mod_add(s, x % p, p);
    return s;
  };
  std::uint64_t l2 = mul(l, l), l3 = mul(l2, l), g2 = mul(g, g), g3 = mul(g2, g);
  switch (kind) {
    case ComponentKind::parallel:
      if (size < 0) throw InputError("parallel bundle size must be non-negative");
      return {1 % p, mod_pow(g, size, p)};
    case ComponentKind::clique: {
      if (size < 1) throw InputError("clique order must be at least 1");
      const int r = size - 1;  // vertices besides x
      auto binom = binomial_table_mod(r, p);
      std::uint64_t a = 0, b = 0;
      for (int i = 0; i <= r; ++i) {
        std::uint64_t ones = static_cast<std::uint64_t>(r - i);
        std::uint64_t inner = ones * (ones - (ones > 0 ? 1 : 0)) / 2;
        std::uint64_t base = mul(binom[r][i], mod_pow(l, i, p));
        a = mod_add(a, mul(base, mod_pow(g, inner, p)), p);
        b = mod_add(b, mul(base, mod_pow(g, inner + ones, p)), p);
      }
      return {a, b};
    }
    case ComponentKind::p2:
      return {add({l2, 2 * l, g}), add({l2, mul(l, g), l, g2})};
    case ComponentKind::p3:
      return {add({l3, 3 * l2, 2 * mul(l, g), l, g2}),
              add({l3, 2 * l2, mul(l2, g), 2 * mul(l, g), mul(l, g2), g3})};
  }
  throw InputError("unknown component kind");
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> component_halves(ComponentKind kind, int size, const SpinParams& sp) {
  require_prime(sp.p);
  auto [a, b] = component_factors(kind, size, sp);
  return {mod_mul(sp.lambda, a, sp.p), b};
}

PinnedSpinGraph component_graph(ComponentKind kind, int size) {
  std::vector<Edge> es;
  switch (kind) {
    case ComponentKind::parallel: {
      for (int i = 0; i < size; ++i) es.emplace_back(0, 1);
      return {Multigraph(2, es), {{1, 1}}};
    }
    case ComponentKind::clique:
      if (size < 1) throw InputError("clique order must be at least 1");
      for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v) es.emplace_back(u, v);
      return {Multigraph(size, es), {}};
    case ComponentKind::p2:
      return {Multigraph(3, {{0, 1}, {1, 2}}), {}};
    case ComponentKind::p3:
      return {Multigraph(4, {{0, 1}, {1, 2}, {2, 3}}), {}};
  }
  throw InputError("unknown component kind");
}

std::pair<std::uint64_t, std::uint64_t> explicit_halves(const PinnedSpinGraph& j, int x, const SpinParams& sp,
                                                        const Budget& budget) {
  if (j.pins.count(x)) throw InputError("distinguished vertex must be free");
  PinnedSpinGraph zero = j, one = j;
  zero.pins[x] = 0;
  one.pins[x] = 1;
  return {z_spin(zero, sp, budget).value(), z_spin(one, sp, budget).value()};
}

std::vector<int> GadgetVector::entries() const {
  std::vector<int> e{k0};
  e.insert(e.end(), cliques.begin(), cliques.end());
  e.push_back(k_p2);
  e.push_back(k_p3);
  return e;
}

GadgetVector GadgetVector::from_entries(int m, const std::vector<int>& e) {
  if (m < 2 || static_cast<int>(e.size()) != m + 1) throw InputError("gadget vector needs m >= 2 and m+1 entries");
  for (int x : e)
    if (x < 0) throw InputError("gadget vector entries must be non-negative");
  GadgetVector kv;
  kv.m = m;
  kv.k0 = e[0];
  kv.cliques.assign(e.begin() + 1, e.end() - 2);
  kv.k_p2 = e[m - 1];
  kv.k_p3 = e[m];
  return kv;
}

int GadgetVector::vertex_count() const {
  int n = 1 + (k0 > 0 ? 1 : 0) + 2 * k_p2 + 3 * k_p3;
  for (std::size_t j = 0; j < cliques.size(); ++j) n += cliques[j] * static_cast<int>(j + 1);
  return n;
}

std::string GadgetVector::to_string() const {
  std::ostringstream out;
  out << "(";
  auto e = entries();
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ")";
  return out.str();
}

namespace {

// Family member i of a size-m vector: 0 parallel, 1..m-2 cliques, m-1 P2, m P3.
std::pair<ComponentKind, int> family_member(int m, int i) {
  if (i == 0) return {ComponentKind::parallel, 1};
  if (i == m - 1) return {ComponentKind::p2, 0};
  if (i == m) return {ComponentKind::p3, 0};
  return {ComponentKind::clique, i + 1};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> assemble_gadget(const GadgetVector& kv, const SpinParams& sp) {
  require_prime(sp.p);
  const std::uint64_t p = sp.p;
  auto e = kv.entries();
  std::uint64_t z0 = sp.lambda % p, z1 = 1 % p;
  for (int i = 0; i <= kv.m; ++i) {
    auto [kind, size] = family_member(kv.m, i);
    auto [a, b] = component_factors(kind, size, sp);
    z0 = mod_mul(z0, mod_pow(a, e[i], p), p);
    z1 = mod_mul(z1, mod_pow(b, e[i], p), p);
  }
  return {z0, z1};
}

PinnedSpinGraph assemble_explicit(const GadgetVector& kv) {
  std::vector<Edge> es;
  std::map<int, int> pins;
  int next = 1;
  if (kv.k0 > 0) {
    int y = next++;
    pins[y] = 1;
    for (int i = 0; i < kv.k0; ++i) es.emplace_back(0, y);
  }
  for (std::size_t j = 0; j < kv.cliques.size(); ++j) {
    const int extra = static_cast<int>(j + 1);
    for (int c = 0; c < kv.cliques[j]; ++c) {
      std::vector<int> vs{0};
      for (int t = 0; t < extra; ++t) vs.push_back(next++);
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) es.emplace_back(vs[a], vs[b]);
    }
  }
  auto add_path = [&](int len) {
    int prev = 0;
    for (int t = 0; t < len; ++t) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  };
  for (int c = 0; c < kv.k_p2; ++c) add_path(2);
  for (int c = 0; c < kv.k_p3; ++c) add_path(3);
  return {Multigraph(next, es), pins};
}

SearchBounds SearchBounds::defaults_for(std::uint64_t p) {
  return {static_cast<int>(p) + 1, static_cast<int>(p) - 1};
}

SearchResult search_gadget(const SpinParams& sp, SearchBounds bounds) {
  require_prime(sp.p);
  const std::uint64_t p = sp.p;
  if (sp.lambda % p == 0) throw InputError("gadget search needs lambda != 0");
  if (sp.gamma_sq_is_one()) throw InputError("gadget search needs gamma^2 != 1");
  auto defaults = SearchBounds::defaults_for(p);
  if (bounds.max_m <= 0) bounds.max_m = defaults.max_m;
  if (bounds.entry_cap <= 0) bounds.entry_cap = defaults.entry_cap;

  SearchResult result;
  for (int m = 2; m <= bounds.max_m; ++m) {
    result.max_m_tried = m;
    // Ratio B/A per member; members with a zero half must stay unused.
    std::vector<std::uint64_t> ratio(m + 1, 0);
    for (int i = 0; i <= m; ++i) {
      auto [kind, size] = family_member(m, i);
      auto [a, b] = component_factors(kind, size, sp);
      if (a != 0 && b != 0) ratio[i] = mod_mul(b, mod_inv(a, p), p);
    }
    // reach[i]: products attainable by members 0..i-1.
    std::vector<std::vector<char>> reach(m + 2, std::vector<char>(p, 0));
    reach[0][1 % p] = 1;
    for (int i = 0; i <= m; ++i) {
      reach[i + 1] = reach[i];
      if (ratio[i] == 0) continue;
      for (std::uint64_t x = 1; x < p; ++x) {
        if (!reach[i][x]) continue;
        std::uint64_t y = x;
        for (int e = 1; e <= bounds.entry_cap; ++e) {
          y = mod_mul(y, ratio[i], p);
          reach[i + 1][y] = 1;
        }
      }
    }
    std::uint64_t target = sp.lambda;
    if (!reach[m + 1][target]) continue;
    // Greedy from the most significant entry (k_P3) down to k0.
    std::vector<int> e(m + 1, 0);
    for (int i = m; i >= 0; --i) {
      std::uint64_t inv = ratio[i] ? mod_inv(ratio[i], p) : 0;
      std::uint64_t t = target;
      int pick = -1;
      for (int k = 0; k <= (ratio[i] ? bounds.entry_cap : 0); ++k) {
        if (reach[i][t]) {
          pick = k;
          break;
        }
        t = mod_mul(t, inv, p);
      }
      if (pick < 0) throw InternalError("reachable target lost during greedy descent");
      e[i] = pick;
      target = t;
    }
    result.kv = GadgetVector::from_entries(m, e);
    std::tie(result.z0, result.z1) = assemble_gadget(*result.kv, sp);
    if (result.z0 != result.z1 || result.z0 == 0) throw InternalError("search produced an invalid gadget");
    return result;
  }
  return result;
}

std::string to_string(SpinClass c) {
  switch (c) {
    case SpinClass::Easy:
      return "Easy";
    case SpinClass::Hard:
      return "Hard";
    case SpinClass::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

SpinVerdict classify_spin(const SpinParams& sp, SearchBounds bounds) {
  require_prime(sp.p);
  const std::uint64_t p = sp.p, g = sp.gamma % p, l = sp.lambda % p;
  SpinVerdict v;
  if (l == 0) {
    v.verdict = SpinClass::Easy;
    v.reason = "lambda=0";
    return v;
  }
  if (g == 1 % p) {
    v.verdict = SpinClass::Easy;
    v.reason = "gamma=1";
    return v;
  }
  if (g == p - 1) {
    bool special = l == 1 || l == p - 1 || l * l % p == p - 1;
    if (special) {
      v.verdict = SpinClass::Easy;
      v.reason = "gamma=-1, lambda in {0,+-1,+-i_p}";
      return v;
    }
  }
  if (g == 0) {
    // K_k with k = p + 2 - lambda gives halves lambda^(k-1) * (lambda + k - 1) and lambda^(k-1).
    int k = static_cast<int>(p + 2 - l);
    auto [h0, h1] = component_halves(ComponentKind::clique, k, sp);
    if (h0 != h1 || h0 == 0) throw InternalError("clique witness failed");
    v.verdict = SpinClass::Hard;
    v.reason = "gamma=0";
    v.witness_kind = "clique";
    v.witness_size = k;
    v.z0 = h0;
    v.z1 = h1;
    return v;
  }
  if (sp.gamma_sq_is_one()) {
    v.verdict = SpinClass::Unknown;
    v.reason = "gamma=-1, lambda outside {0,+-1,+-i_p}";
    return v;
  }
  std::uint64_t power = 1 % p;
  for (int k = 0; k < static_cast<int>(p); ++k) {
    if (power == l) {
      auto [h0, h1] = component_halves(ComponentKind::parallel, k, sp);
      if (h0 != h1 || h0 == 0) throw InternalError("parallel-edge witness failed");
      v.verdict = SpinClass::Hard;
      v.reason = "lambda is a power of gamma";
      v.witness_kind = "parallel";
      v.witness_size = k;
      v.z0 = h0;
      v.z1 = h1;
      return v;
    }
    power = mod_mul(power, g, p);
  }
  auto found = search_gadget(sp, bounds);
  if (found.kv) {
    v.verdict = SpinClass::Hard;
    v.reason = "gadget search";
    v.witness_kind = "search";
    v.kv = found.kv;
    v.z0 = found.z0;
    v.z1 = found.z1;
    return v;
  }
  v.verdict = SpinClass::Unknown;
  v.reason = "no gadget within bounds";
  return v;
}

}  // namespace modhom
