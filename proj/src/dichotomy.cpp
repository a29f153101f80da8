#include "modhom/dichotomy.hpp"

#include <algorithm>
#include <functional>

#include "modhom/errors.hpp"

namespace modhom {

namespace {

// Enumerate simple s-t paths until `limit` have been seen; keeps the first.
int simple_paths(const Graph& h, int s, int t, int limit, std::vector<int>* first) {
  std::vector<char> on(h.n(), 0);
  std::vector<int> path{s};
  on[s] = 1;
  int found = 0;
  std::function<void(int)> dfs = [&](int x) {
    if (found >= limit) return;
    if (x == t) {
      if (found++ == 0 && first) *first = path;
      return;
    }
    for (int y : h.neighbors(x)) {
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on[y] = 0;
      if (found >= limit) return;
    }
  };
  dfs(s);
  return found;
}

bool end_ok(const Graph& h, int v, std::uint64_t p) { return h.degree(v) % p != 1 % p; }

}  // namespace

int count_simple_paths(const Graph& h, int s, int t, int limit) { return simple_paths(h, s, t, limit, nullptr); }

std::string ab_path_violation(const Graph& h, const AbPath& path) {
  const auto& xs = path.vertices;
  if (!is_prime(path.p)) return "modulus is not prime";
  if (xs.size() < 2) return "path needs at least one edge";
  std::vector<char> seen(h.n(), 0);
  for (int x : xs) {
    if (x < 0 || x >= h.n()) return "vertex out of range";
    if (seen[x]) return "repeated vertex";
    seen[x] = 1;
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!h.adjacent(xs[i], xs[i + 1])) return "consecutive vertices not adjacent";
  if (count_simple_paths(h, xs.front(), xs.back(), 2) != 1) return "path between the ends is not unique";
  const std::uint64_t p = path.p;
  if (path.a != h.degree(xs.front()) % p) return "a does not match the first degree";
  if (path.b != h.degree(xs.back()) % p) return "b does not match the last degree";
  if (path.a == 1 % p || path.b == 1 % p) return "end degree is 1 mod p";
  for (std::size_t i = 1; i + 1 < xs.size(); ++i)
    if (h.degree(xs[i]) % p != 1 % p) return "interior degree is not 1 mod p";
  return "";
}

std::optional<AbPath> find_ab_path(const Graph& h, std::uint64_t p) {
  require_prime(p);
  std::optional<AbPath> best;
  for (int x = 0; x < h.n(); ++x) {
    if (!end_ok(h, x, p)) continue;
    for (int y = 0; y < h.n(); ++y) {
      if (y == x || !end_ok(h, y, p)) continue;
      std::vector<int> path;
      if (simple_paths(h, x, y, 2, &path) != 1) continue;
      bool interior_ok = true;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        interior_ok = interior_ok && h.degree(path[i]) % p == 1 % p;
      if (!interior_ok) continue;
      if (!best || path.size() < best->vertices.size() ||
          (path.size() == best->vertices.size() && path < best->vertices)) {
        best = AbPath{path, h.degree(x) % p, h.degree(y) % p, p};
      }
    }
  }
  return best;
}

std::optional<AbPath> ab_path_from_longest_path(const Graph& tree, std::uint64_t p) {
  require_prime(p);
  auto rep = analyze_structure(tree);
  if (!rep.is_tree || rep.is_star) return std::nullopt;
  std::vector<int> longest;
  for (int s = 0; s < tree.n(); ++s) {
    for (int t = 0; t < tree.n(); ++t) {
      if (s == t) continue;
      std::vector<int> path;
      simple_paths(tree, s, t, 1, &path);
      if (path.size() > longest.size() || (path.size() == longest.size() && path < longest)) longest = path;
    }
  }
  // longest = y, x_0, ..., x_l with l >= 2 since the tree is not a star.
  const int l = static_cast<int>(longest.size()) - 2;
  auto x = [&](int i) { return longest[i + 1]; };
  if (!end_ok(tree, x(0), p)) return std::nullopt;
  for (int k = 1; k <= l - 1; ++k) {
    if (end_ok(tree, x(k), p)) {
      AbPath out{{}, tree.degree(x(0)) % p, tree.degree(x(k)) % p, p};
      for (int i = 0; i <= k; ++i) out.vertices.push_back(x(i));
      return out;
    }
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PolyTime:
      return "PolyTime";
    case Verdict::Hard:
      return "Hard";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Classification classify(const Graph& h, std::uint64_t p, const Budget& budget) {
  Classification c;
  c.p = p;
  c.reduction = reduced_form(h, p, TieBreak::deterministic, budget);
  const Graph& reduced = c.reduction.result;
  auto rep = analyze_structure(reduced);
  if (std::all_of(rep.complete_bipartite.begin(), rep.complete_bipartite.end(), [](bool b) { return b; })) {
    c.verdict = Verdict::PolyTime;
    c.bipartite_parts = rep.part_sizes;
    return c;
  }
  if (rep.is_forest) {
    c.path = find_ab_path(reduced, p);
    if (!c.path) throw InternalError("reduced forest without stars-only components has no certificate path");
    c.verdict = Verdict::Hard;
    return c;
  }
  c.verdict = Verdict::Unknown;
  return c;
}

ZpScalar count_homs_polytime(const Graph& g, const Graph& h, std::uint64_t p) {
  require_prime(p);
  auto hrep = analyze_structure(h);
  for (bool ok : hrep.complete_bipartite)
    if (!ok) throw InputError("target has a component that is not complete bipartite");
  auto grep = analyze_structure(g);

  std::uint64_t total = 1 % p;
  for (std::size_t c = 0; c < grep.components.size(); ++c) {
    std::uint64_t sum = 0;
    if (grep.components[c].size() == 1) {
      sum = static_cast<std::uint64_t>(h.n()) % p;
    } else if (grep.component_bipartite[c]) {
      auto [x, y] = grep.part_sizes[c];
      for (auto [a, b] : hrep.part_sizes) {
        std::uint64_t ap = static_cast<std::uint64_t>(a) % p, bp = static_cast<std::uint64_t>(b) % p;
        std::uint64_t term = mod_add(mod_mul(mod_pow(ap, x, p), mod_pow(bp, y, p), p),
                                     mod_mul(mod_pow(ap, y, p), mod_pow(bp, x, p), p), p);
        sum = mod_add(sum, term, p);
      }
    }
    total = mod_mul(total, sum, p);
  }
  return ZpScalar(static_cast<long long>(total), p);
}

}  // namespace modhom
