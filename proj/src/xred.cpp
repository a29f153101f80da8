#include "modhom/xred.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "modhom/errors.hpp"
#include "modhom/wbis.hpp"

namespace modhom {

JConstruction build_J(const BipartiteGraph& g, const AbPath& path) {
  const int k = path.k();
  if (k < 1) throw InputError("path must have at least one edge");
  const int n = g.n();
  JConstruction out;
  out.source = g;
  out.path = path;
  out.left_apex = n;
  out.right_apex = n + 1;

  std::vector<std::tuple<int, int, int>> sk;
  for (int v = 0; v < n; ++v) sk.emplace_back(v, g.is_left(v) ? n : n + 1, 1);
  for (auto [u, v] : g.graph().edges()) sk.emplace_back(u, v, k);
  out.skeleton = Skeleton::make(n + 2, sk);

  // Interiors are allocated in skeleton edge order; source edges come first
  // there because apex ids exceed every source id.
  int next = n + 2;
  for (auto [u, v] : g.graph().edges()) {
    std::vector<int> seq{u};
    for (int step = 1; step < k; ++step) seq.push_back(next++);
    seq.push_back(v);
    if (!g.is_left(u)) std::reverse(seq.begin(), seq.end());
    out.edge_paths.push_back(std::move(seq));
  }
  out.j.base = expand_skeleton(out.skeleton);
  out.j.pins = {{out.left_apex, path.vertices.front()}, {out.right_apex, path.vertices.back()}};
  return out;
}

namespace {

bool is_independent(const Graph& g, std::uint64_t mask) {
  for (auto [u, v] : g.edges())
    if ((mask >> u & 1) && (mask >> v & 1)) return false;
  return true;
}

std::set<std::uint64_t> all_independent_sets(const Graph& g) {
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ULL << g.n()); ++mask)
    if (is_independent(g, mask)) out.insert(mask);
  return out;
}

BigInt big_pow(long long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

constexpr int kAuditMaxSource = 20;

// Walks every hom J -> h, groups them by the set of source vertices not sent
// to the path, and checks the groups against the predicted sizes.
std::string audit_classes(const JConstruction& jc, const Graph& h, std::uint64_t p, std::uint64_t states,
                          int& classes) {
  const BipartiteGraph& g = jc.source;
  const int n = g.n();
  const auto& xs = jc.path.vertices;
  const int k = jc.path.k();
  const int x0 = xs.front(), xk = xs.back(), x1 = xs[1], xk1 = xs[k - 1];

  Budget b = default_budget();
  b.enumeration_states = states;
  std::map<std::uint64_t, BigInt> sizes;
  std::string violation;
  try {
    for_each_hom(jc.j, h, [&](const std::vector<int>& sigma) {
      std::uint64_t mask = 0;
      for (int v = 0; v < n; ++v) {
        int anchor = g.is_left(v) ? x0 : xk;
        if (!h.adjacent(sigma[v], anchor)) {
          violation = "vertex " + std::to_string(v) + " lands outside the apex neighbourhood";
          return false;
        }
        if (sigma[v] != (g.is_left(v) ? x1 : xk1)) mask |= 1ULL << v;
      }
      sizes[mask] += 1;
      return true;
    }, b);
  } catch (const BudgetExceeded&) {
    return "skipped";
  }
  if (!violation.empty()) return violation;

  classes = static_cast<int>(sizes.size());
  for (const auto& [mask, count] : sizes)
    if (!is_independent(g.graph(), mask)) return "class set is not independent";
  auto expected = all_independent_sets(g.graph());
  if (expected.size() != sizes.size()) return "class map is not onto the independent sets";

  const long long wl = h.degree(x0) - 1, wr = h.degree(xk) - 1;
  const BigInt inner = count_walks(h, x1, xk1, k);
  if (inner % p != 1 % p) return "inner walk count is not 1 mod p";
  for (auto mask : expected) {
    auto it = sizes.find(mask);
    if (it == sizes.end()) return "class map is not onto the independent sets";
    int in_l = 0, in_r = 0, outside_edges = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) ++(g.is_left(v) ? in_l : in_r);
    for (auto [u, v] : g.graph().edges())
      if (!(mask >> u & 1) && !(mask >> v & 1)) ++outside_edges;
    BigInt predicted = big_pow(wl, in_l) * big_pow(wr, in_r);
    for (int e = 0; e < outside_edges; ++e) predicted *= inner;
    if (predicted != it->second) return "class size differs from the product formula";
  }
  return "passed";
}

}  // namespace

WbisToHomsReport verify_wbis_to_homs(const BipartiteGraph& g, const Graph& h, std::uint64_t p,
                                     std::uint64_t audit_states, const Budget& budget) {
  require_prime(p);
  if (!analyze_structure(h).is_tree) throw InputError("target must be a tree");
  auto path = find_ab_path(h, p);
  if (!path) throw InputError("target has no (a,b,p)-path for p=" + std::to_string(p));

  WbisToHomsReport r;
  r.path = *path;
  JConstruction jc = build_J(g, *path);
  r.j_vertices = jc.j.base.n();

  double flat_log = r.j_vertices * std::log10(static_cast<double>(std::max(h.n(), 1)));
  if (flat_log <= 7.0) {
    r.method = "flat";
    r.lhs = count_homs(jc.j, h, p, budget).residue->value();
  } else {
    r.method = "subdivided";
    r.lhs = count_homs_subdivided(jc.skeleton, jc.j.pins, h, p, budget).value();
  }
  auto w = WbisWeights::make(static_cast<long long>(path->a) - 1, static_cast<long long>(path->b) - 1, p);
  r.rhs = z_wbis(g, w, budget).value();
  r.ok = r.lhs == r.rhs;
  if (audit_states > 0 && g.n() <= kAuditMaxSource) r.audit = audit_classes(jc, h, p, audit_states, r.classes);
  return r;
}

ConnBisReport connbis_transform(const BipartiteGraph& g, const Budget& budget) {
  const int n = g.n();
  std::vector<bool> sides = g.sides();
  ConnBisReport r;
  for (int v = 0; v < n; ++v) {
    if (!sides[v] && g.graph().degree(v) == 0) {
      sides[v] = true;
      r.rehomed.push_back(v);
    }
  }
  std::vector<Edge> es = g.graph().edges();
  int right = 0;
  for (int v = 0; v < n; ++v) {
    if (sides[v]) es.emplace_back(v, n);
    else ++right;
  }
  r.transformed = Graph(n + 1, es);
  r.is_source = count_independent_sets(g.graph(), budget);
  r.right_subsets = BigInt(1) << right;
  r.is_transformed = count_independent_sets(r.transformed, budget);
  r.connected = is_connected(r.transformed);
  r.ok = r.connected && r.is_source + r.right_subsets == r.is_transformed;
  return r;
}

namespace {

std::string audit_p4(const BipartiteGraph& g, const Graph& p4, std::uint64_t states) {
  const int n = g.n();
  if (n > kAuditMaxSource) return "skipped";
  Budget b = default_budget();
  b.enumeration_states = states;
  // Orientation 0: left side on {0,2}, set = left at 0 plus right at 3.
  // Orientation 1 is the mirror image x -> 3 - x.
  std::set<std::uint64_t> seen[2];
  std::string violation;
  try {
    for_each_hom({g.graph(), {}}, p4, [&](const std::vector<int>& sigma) {
      int orient = (sigma[0] % 2 == 0) == g.is_left(0) ? 0 : 1;
      std::uint64_t mask = 0;
      for (int v = 0; v < n; ++v) {
        int img = orient == 0 ? sigma[v] : 3 - sigma[v];
        bool even = img % 2 == 0;
        if (even != g.is_left(v)) {
          violation = "map does not respect the bipartition";
          return false;
        }
        if (img == (g.is_left(v) ? 0 : 3)) mask |= 1ULL << v;
      }
      if (!seen[orient].insert(mask).second) {
        violation = "two maps share a set and orientation";
        return false;
      }
      return true;
    }, b);
  } catch (const BudgetExceeded&) {
    return "skipped";
  }
  if (!violation.empty()) return violation;
  auto expected = all_independent_sets(g.graph());
  if (seen[0] != expected || seen[1] != expected) return "maps do not pair up with the independent sets";
  return "passed";
}

}  // namespace

P4Report verify_p4_identity(const BipartiteGraph& g, std::uint64_t audit_states, const Budget& budget) {
  if (g.n() == 0) throw InputError("graph must be non-empty");
  if (!is_connected(g.graph())) throw InputError("graph must be connected");
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  P4Report r;
  r.is_count = count_independent_sets(g.graph(), budget);
  r.hom_count = *count_homs(g.graph(), p4, std::nullopt, budget).exact;
  r.ok = 2 * r.is_count == r.hom_count;
  if (audit_states > 0) r.audit = audit_p4(g, p4, audit_states);
  return r;
}

BigInt crt_reconstruct(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli) {
  if (residues.size() != moduli.size()) throw InputError("one residue per modulus required");
  BigInt x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const BigInt mi = moduli[i];
    if (mi == 0) throw InputError("modulus must be positive");
    // Solve x + m*t == r (mod mi) with t = (r - x) * m^-1.
    BigInt mm = m % mi, inv = 0;
    BigInt a = mm, b = mi, s0 = 1, s1 = 0;
    while (b != 0) {
      BigInt q = a / b;
      BigInt t = a - q * b;
      a = b;
      b = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (a != 1 && mi != 1) throw InputError("moduli must be pairwise coprime");
    inv = ((s0 % mi) + mi) % mi;
    BigInt diff = ((BigInt(residues[i]) - x) % mi + mi) % mi;
    BigInt t = diff * inv % mi;
    x += m * t;
    m *= mi;
  }
  return x;
}

std::vector<std::uint64_t> squarefree_factors(std::uint64_t k) {
  if (k < 2) throw InputError("modulus must be at least 2");
  std::vector<std::uint64_t> out;
  std::uint64_t rest = k;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    rest /= d;
    if (rest % d == 0) throw InputError("modulus " + std::to_string(k) + " is not squarefree");
    out.push_back(d);
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

CompositeCount count_homs_mod_composite(const Graph& g, const Graph& h, std::uint64_t k, const Budget& budget) {
  CompositeCount c;
  c.modulus = k;
  c.primes = squarefree_factors(k);
  for (auto q : c.primes) c.residues.push_back(count_homs(g, h, q, budget).residue->value());
  c.value = static_cast<std::uint64_t>(crt_reconstruct(c.residues, c.primes));
  return c;
}

}  // namespace modhom
