#include "modhom/reduction.hpp"

#include <set>
#include <string>

#include "modhom/errors.hpp"
#include "modhom/iso.hpp"
#include "modhom/zp.hpp"

namespace modhom {

std::optional<Permutation> find_order_p_automorphism(const Graph& h, std::uint64_t p, const Budget& budget) {
  require_prime(p);
  std::optional<Permutation> found;
  if (p > static_cast<std::uint64_t>(h.n())) return found;
  for_each_automorphism(
      h,
      [&](const Permutation& rho) {
        found = rho;
        return false;
      },
      p, budget);
  return found;
}

Graph fixed_subgraph(const Graph& h, const Permutation& rho) {
  if (!is_automorphism(h, rho)) throw InputError("permutation is not an automorphism");
  return h.induced(rho.fixed_points());
}

namespace {

std::vector<int> ids_of(std::uint64_t mask) {
  std::vector<int> ids;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) ids.push_back(v);
  return ids;
}

void explore_all_paths(const Graph& h, std::uint64_t p, const Budget& budget, ReductionTrace& trace) {
  if (h.n() > 64) throw BudgetExceeded("all_paths reduction limited to 64 vertices");
  std::uint64_t all = h.n() == 64 ? ~0ULL : (1ULL << h.n()) - 1;
  std::set<std::uint64_t> seen{all};
  std::vector<std::uint64_t> stack{all};
  std::set<std::uint64_t> leaves;
  while (!stack.empty()) {
    std::uint64_t mask = stack.back();
    stack.pop_back();
    auto ids = ids_of(mask);
    Graph g = h.induced(ids);
    bool any = false;
    for_each_automorphism(
        g,
        [&](const Permutation& rho) {
          any = true;
          std::uint64_t next = 0;
          for (int v : rho.fixed_points()) next |= 1ULL << ids[v];
          if (seen.insert(next).second) stack.push_back(next);
          return true;
        },
        p, budget);
    if (!any) leaves.insert(mask);
  }
  std::vector<Graph> leaf_graphs;
  for (auto mask : leaves) {
    trace.leaves.push_back(ids_of(mask));
    leaf_graphs.push_back(h.induced(trace.leaves.back()));
  }
  trace.leaves_isomorphic = true;
  for (std::size_t i = 0; i < leaf_graphs.size(); ++i)
    for (std::size_t j = i + 1; j < leaf_graphs.size(); ++j)
      if (!are_isomorphic(leaf_graphs[i], leaf_graphs[j], budget)) trace.leaves_isomorphic = false;
}

}  // namespace

ReductionTrace reduced_form(const Graph& h, std::uint64_t p, TieBreak mode, const Budget& budget) {
  require_prime(p);
  ReductionTrace trace;
  trace.p = p;
  trace.input = h;
  Graph current = h;
  std::vector<int> ids(h.n());
  for (int v = 0; v < h.n(); ++v) ids[v] = v;
  while (auto rho = find_order_p_automorphism(current, p, budget)) {
    auto kept = rho->fixed_points();
    Graph after = current.induced(kept);
    std::vector<int> next_ids;
    for (int v : kept) next_ids.push_back(ids[v]);
    trace.steps.push_back({current, *rho, after, kept});
    current = std::move(after);
    ids = std::move(next_ids);
  }
  trace.result = current;
  trace.result_ids = ids;
  if (mode == TieBreak::all_paths) explore_all_paths(h, p, budget, trace);
  return trace;
}

}  // namespace modhom
