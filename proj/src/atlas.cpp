#include "modhom/atlas.hpp"

#include <sstream>

#include "modhom/config.hpp"
#include "modhom/trees.hpp"

namespace modhom {

Json atlas_table(int max_n, const std::vector<std::uint64_t>& primes, int jobs, const Budget& budget) {
  struct Item {
    Graph tree;
    std::string form;
    std::uint64_t p;
  };
  std::vector<Item> items;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& t : enumerate_trees(n)) {
      std::string form = tree_canonical_form(t);
      for (auto p : primes) items.push_back({t, form, p});
    }
  auto rows = parallel_map<Json>(items.size(), jobs, [&](std::size_t i) {
    const Item& it = items[i];
    Classification c = classify(it.tree, it.p, budget);
    Json cj = to_json(c);
    return Json{{"n", it.tree.n()},
                {"tree", it.form},
                {"edges", to_json(it.tree)["edges"]},
                {"p", it.p},
                {"verdict", cj["verdict"]},
                {"reduced_vertices", c.reduction.result.n()},
                {"certificate", cj["certificate"]}};
  });
  return {{"max_n", max_n}, {"primes", primes}, {"rows", rows}};
}

std::string spin_sweep_csv(std::uint64_t p, const SearchBounds& bounds, int jobs) {
  auto rows = parallel_map<std::string>(p, jobs, [&](std::size_t gamma) {
    std::ostringstream out;
    for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
      SpinVerdict v = classify_spin(SpinParams::make(static_cast<long long>(gamma), static_cast<long long>(lambda), p),
                                    bounds);
      out << gamma << "," << lambda << "," << to_string(v.verdict) << "," << v.witness_kind << ",";
      if (v.kv) out << "\"" << v.kv->to_string() << "\"";
      else if (!v.witness_kind.empty()) out << v.witness_size;
      out << ",";
      if (v.verdict == SpinClass::Hard) out << v.z0;
      out << "\n";
    }
    return out.str();
  });
  std::string csv = "gamma,lambda,verdict,kind,kv,z0\n";
  for (const auto& r : rows) csv += r;
  return csv;
}

}  // namespace modhom
