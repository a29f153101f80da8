#include "modhom/json_out.hpp"

namespace modhom {

std::string big_to_string(const BigInt& v) { return v.str(); }

namespace {

Json one_indexed(const std::vector<int>& ids) {
  Json a = Json::array();
  for (int v : ids) a.push_back(v + 1);
  return a;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.n()}, {"edges", edges}};
}

Json to_json(const BipartiteGraph& g) {
  Json j = to_json(g.graph());
  j["left"] = one_indexed(g.left());
  return j;
}

Json to_json(const HomCount& c) {
  Json j = Json::object();
  j["exact"] = c.exact ? Json(big_to_string(*c.exact)) : Json(nullptr);
  if (c.residue) {
    j["residue"] = c.residue->value();
    j["p"] = c.residue->modulus();
  } else {
    j["residue"] = nullptr;
  }
  return j;
}

Json to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"automorphism", s.rho.cycle_notation()},
                     {"kept", one_indexed(s.kept)},
                     {"vertices_before", s.before.n()},
                     {"vertices_after", s.after.n()}});
  }
  Json j = {{"p", t.p},
            {"input", to_json(t.input)},
            {"steps", steps},
            {"reduced_form", to_json(t.result)},
            {"reduced_ids", one_indexed(t.result_ids)}};
  if (!t.leaves.empty()) {
    Json leaves = Json::array();
    for (const auto& l : t.leaves) leaves.push_back(one_indexed(l));
    j["leaves"] = leaves;
    j["leaves_isomorphic"] = t.leaves_isomorphic;
  }
  return j;
}

Json to_json(const AbPath& path, const std::vector<int>& id_map) {
  Json j = {{"a", path.a}, {"b", path.b}, {"k", path.k()}, {"path", one_indexed(path.vertices)}};
  if (!id_map.empty()) {
    std::vector<int> mapped;
    for (int v : path.vertices) mapped.push_back(id_map[v]);
    j["path_input_ids"] = one_indexed(mapped);
  }
  return j;
}

Json to_json(const Classification& c) {
  Json j = {{"verdict", to_string(c.verdict)}, {"p", c.p}, {"reduced_form", to_json(c.reduction.result)}};
  if (c.path) {
    j["certificate"] = to_json(*c.path, c.reduction.result_ids);
  } else if (c.verdict == Verdict::PolyTime) {
    Json parts = Json::array();
    for (auto [a, b] : c.bipartite_parts) parts.push_back({a, b});
    j["certificate"] = {{"bipartite_parts", parts}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json to_json(const TupleVector& v) {
  Json legend = Json::array();
  for (const auto& t : v.legend()) legend.push_back(one_indexed(t));
  Json j = {{"r", v.r}, {"p", v.p}, {"contracted", v.contracted}, {"entries", v.entries}, {"legend", legend}};
  if (v.contracted) j["orbit_sizes"] = v.orbit_sizes;
  return j;
}

Json to_json(const Distinguisher& d) {
  return {{"probe", to_json(d.probe.base)},
          {"marks", one_indexed(d.probe.marks)},
          {"value_a", d.value_a},
          {"value_b", d.value_b}};
}

Json to_json(const BGadget& g) {
  return {{"k", g.b.k},
          {"p", g.b.p},
          {"lambda_l", g.weights.lambda_l},
          {"lambda_r", g.weights.lambda_r},
          {"case", g.case_label},
          {"u_L", g.u_L + 1},
          {"v_R", g.v_R + 1},
          {"verified_by", g.verified_by},
          {"z_B", g.z_b},
          {"z_B_minus_u_L", g.z_minus_uL},
          {"z_B_minus_v_R", g.z_minus_vR}};
}

Json to_json(const GPhi& g) {
  static const char* names[6] = {"u", "u_bar", "w", "v", "v_bar", "z"};
  Json vars = Json::array();
  for (const auto& ids : g.var_ids) {
    Json one = Json::object();
    for (int t = 0; t < 6; ++t) one[names[t]] = ids[t] + 1;
    vars.push_back(one);
  }
  Json copies = Json::array();
  for (std::size_t c = 0; c < g.attach.size(); ++c)
    copies.push_back({{"attach", g.attach[c] + 1}, {"vertices", one_indexed(g.copy_map[c])}});
  return {{"vertices", g.graph.n()},
          {"edges", g.graph.graph().m()},
          {"core_size", g.core_size},
          {"variables", vars},
          {"clauses", one_indexed(g.clause_ids)},
          {"copies", copies},
          {"gadget", to_json(g.gadget)}};
}

Json to_json(const SatReductionReport& r) {
  Json j = {{"lhs", r.lhs},     {"rhs", r.rhs},           {"K", r.K},   {"sat", r.sat},
            {"ok", r.ok},       {"vertices", r.vertices}, {"gadget_case", r.gadget_case}};
  j["direct"] = r.direct ? Json(*r.direct) : Json(nullptr);
  j["direct_method"] = r.direct_method;
  return j;
}

Json to_json(const GadgetVector& kv) {
  return {{"m", kv.m}, {"kv", kv.entries()}, {"vertices", kv.vertex_count()}};
}

Json to_json(const SearchResult& r) {
  Json j = {{"max_m_tried", r.max_m_tried}};
  if (r.kv) {
    j["result"] = "found";
    j["witness"] = to_json(*r.kv);
    j["z0"] = r.z0;
    j["z1"] = r.z1;
  } else {
    j["result"] = "none-within-bounds";
  }
  return j;
}

Json to_json(const SpinVerdict& v) {
  Json j = {{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
  if (v.verdict == SpinClass::Hard) {
    Json w = {{"kind", v.witness_kind}, {"z0", v.z0}, {"z1", v.z1}};
    if (v.kv) w["gadget"] = to_json(*v.kv);
    else w["size"] = v.witness_size;
    j["witness"] = w;
  }
  return j;
}

Json to_json(const WbisToHomsReport& r) {
  return {{"lhs", r.lhs},       {"rhs", r.rhs},           {"ok", r.ok},           {"method", r.method},
          {"audit", r.audit},   {"classes", r.classes},   {"J_vertices", r.j_vertices},
          {"certificate", to_json(r.path)}};
}

Json to_json(const ConnBisReport& r) {
  return {{"lhs", big_to_string(r.is_source + r.right_subsets)},
          {"rhs", big_to_string(r.is_transformed)},
          {"ok", r.ok},
          {"independent_sets", big_to_string(r.is_source)},
          {"right_subsets", big_to_string(r.right_subsets)},
          {"connected", r.connected},
          {"rehomed", one_indexed(r.rehomed)},
          {"transformed", to_json(r.transformed)}};
}

Json to_json(const P4Report& r) {
  return {{"lhs", big_to_string(2 * r.is_count)},
          {"rhs", big_to_string(r.hom_count)},
          {"ok", r.ok},
          {"audit", r.audit}};
}

Json to_json(const CompositeCount& c) {
  return {{"modulus", c.modulus}, {"primes", c.primes}, {"residues", c.residues}, {"value", c.value}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace modhom
