#include "modhom/vectors.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "modhom/errors.hpp"
#include "modhom/homcount.hpp"
#include "modhom/iso.hpp"
#include "modhom/zp.hpp"

namespace modhom {

namespace {

constexpr std::size_t kMaxVectorLength = 1'000'000;

std::size_t checked_power(int base, int r) {
  std::size_t v = 1;
  for (int i = 0; i < r; ++i) {
    v *= static_cast<std::size_t>(base);
    if (v > kMaxVectorLength) throw BudgetExceeded("tuple vector longer than " + std::to_string(kMaxVectorLength));
  }
  return v;
}

bool has_order_p_automorphism(const Graph& h, std::uint64_t p, const Budget& budget) {
  bool found = false;
  for_each_automorphism(
      h,
      [&](const Permutation&) {
        found = true;
        return false;
      },
      p, budget);
  return found;
}

}  // namespace

std::size_t TupleVector::full_length() const { return checked_power(target_n, r); }

std::vector<int> TupleVector::tuple_at(std::size_t index) const {
  std::vector<int> t(r);
  for (int i = r - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % target_n);
    index /= target_n;
  }
  return t;
}

std::vector<std::vector<int>> TupleVector::legend() const {
  std::vector<std::vector<int>> out;
  if (!contracted) {
    for (std::size_t i = 0; i < entries.size(); ++i) out.push_back(tuple_at(i));
    return out;
  }
  out.resize(entries.size());
  std::vector<char> seen(entries.size(), 0);
  for (std::size_t i = 0; i < index_map.size(); ++i) {
    int c = index_map[i];
    if (!seen[c]) {
      seen[c] = 1;
      out[c] = tuple_at(i);
    }
  }
  return out;
}

TupleVector tuple_vector(const DistinguishedGraph& g, const Graph& h, std::uint64_t p, bool contract,
                         const Budget& budget) {
  require_prime(p);
  for (int m : g.marks)
    if (m < 0 || m >= g.base.n()) throw InputError("mark out of range");
  TupleVector tv;
  tv.r = static_cast<int>(g.marks.size());
  tv.target_n = h.n();
  tv.p = p;
  std::size_t nu = tv.r == 0 ? 1 : checked_power(h.n(), tv.r);
  if (h.n() == 0 && tv.r > 0) nu = 0;

  std::vector<std::uint64_t> full(nu);
  for (std::size_t i = 0; i < nu; ++i) {
    full[i] = count_homs_mod(g.base, g.marks, tv.tuple_at(i), h, p, budget);
  }
  if (!contract) {
    tv.entries = std::move(full);
    return tv;
  }

  if (has_order_p_automorphism(h, p, budget)) {
    throw InputError("target has an automorphism of order " + std::to_string(p) + "; contraction undefined");
  }
  auto group = automorphism_group(h, budget);
  tv.contracted = true;
  tv.index_map.assign(nu, -1);
  for (std::size_t i = 0; i < nu; ++i) {
    if (tv.index_map[i] >= 0) continue;
    int cls = static_cast<int>(tv.entries.size());
    tv.entries.push_back(full[i]);
    std::uint64_t orbit = 0;
    auto t = tv.tuple_at(i);
    for (const auto& rho : group) {
      std::size_t idx = 0;
      for (int x : t) idx = idx * h.n() + rho(x);
      if (tv.index_map[idx] < 0) {
        tv.index_map[idx] = cls;
        ++orbit;
        if (full[idx] != full[i]) {
          throw InternalError("pinned counts differ inside one isomorphism class");
        }
      }
    }
    tv.orbit_sizes.push_back(orbit);
  }
  return tv;
}

TupleVector vec_combine(VecOp op, const TupleVector& a, const TupleVector& b) {
  if (a.p != b.p || a.r != b.r || a.target_n != b.target_n || a.contracted != b.contracted ||
      a.entries.size() != b.entries.size() || a.index_map != b.index_map) {
    throw InputError("tuple vectors have different shapes");
  }
  TupleVector out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    out.entries[i] = op == VecOp::add ? mod_add(a.entries[i], b.entries[i], a.p) : mod_mul(a.entries[i], b.entries[i], a.p);
  }
  return out;
}

TupleVector vec_scale(const TupleVector& a, std::uint64_t c) {
  TupleVector out = a;
  for (auto& e : out.entries) e = mod_mul(e, c % a.p, a.p);
  return out;
}

std::vector<Graph> connected_probes(int e) {
  if (e == 0) return {Graph(1)};
  std::vector<std::vector<Edge>> found;
  for (int s = 2; s <= e + 1; ++s) {
    std::vector<Edge> pairs;
    for (int u = 0; u < s; ++u)
      for (int v = u + 1; v < s; ++v) pairs.emplace_back(u, v);
    if (static_cast<int>(pairs.size()) < e) continue;
    // Walk all e-subsets of the pair list via a selection mask.
    std::vector<char> pick(pairs.size(), 0);
    std::fill(pick.begin(), pick.begin() + e, 1);
    do {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pick[i]) es.push_back(pairs[i]);
      Graph g(s, es);
      bool all_used = true;
      for (int v = 0; v < s; ++v) all_used = all_used && g.degree(v) > 0;
      if (all_used && is_connected(g)) found.push_back(es);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::sort(found.begin(), found.end());
  std::vector<Graph> out;
  for (auto& es : found) {
    int s = 0;
    for (auto [u, v] : es) s = std::max({s, u + 1, v + 1});
    out.emplace_back(s, es);
  }
  return out;
}

std::optional<Distinguisher> find_distinguisher(const Graph& h, const std::vector<int>& marks_a,
                                                const std::vector<int>& marks_b, std::uint64_t p, int max_edges,
                                                const Budget& budget) {
  require_prime(p);
  if (marks_a.size() != marks_b.size()) throw InputError("mark tuples have different lengths");
  for (int x : marks_a)
    if (x < 0 || x >= h.n()) throw InputError("mark out of range");
  for (int x : marks_b)
    if (x < 0 || x >= h.n()) throw InputError("mark out of range");
  if (has_order_p_automorphism(h, p, budget)) {
    throw InputError("target has an automorphism of order " + std::to_string(p));
  }
  if (are_isomorphic(DistinguishedGraph{h, marks_a}, DistinguishedGraph{h, marks_b}, budget)) {
    throw InputError("marked targets are isomorphic; no distinguisher exists");
  }
  const int r = static_cast<int>(marks_a.size());
  for (int e = 0; e <= max_edges; ++e) {
    for (const Graph& probe : connected_probes(e)) {
      std::size_t tuples = 1;
      for (int i = 0; i < r; ++i) tuples *= probe.n();
      for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<int> marks(r);
        std::size_t rest = t;
        for (int i = r - 1; i >= 0; --i) {
          marks[i] = static_cast<int>(rest % probe.n());
          rest /= probe.n();
        }
        auto va = count_homs_mod(probe, marks, marks_a, h, p, budget);
        auto vb = count_homs_mod(probe, marks, marks_b, h, p, budget);
        if (va != vb) return Distinguisher{DistinguishedGraph{probe, marks}, va, vb};
      }
    }
  }
  return std::nullopt;
}

}  // namespace modhom
