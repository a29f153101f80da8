// Command-line front end. Every subcommand prints one JSON document (or CSV
// for spin sweeps) on stdout. Exit codes: 0 ok, 1 bad input, 2 budget.
#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "modhom/atlas.hpp"
#include "modhom/config.hpp"
#include "modhom/errors.hpp"
#include "modhom/graph_io.hpp"
#include "modhom/json_out.hpp"

using namespace modhom;

namespace {

struct Globals {
  std::string config_path;
  std::optional<int> jobs;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> states;
  std::optional<int> iso_max;
};

Graph load_simple(const std::string& path) { return parse_simple_graph(read_text_file(path)); }
BipartiteGraph load_bip(const std::string& path) { return parse_bipartite_graph(read_text_file(path)); }

WbisWeights weights_from(long long ll, long long lr, std::uint64_t p) { return WbisWeights::make(ll, lr, p); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphism counting modulo a prime: evaluators, reductions, classifiers"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "JSON config file (flags win)")->check(CLI::ExistingFile);
  app.add_option("--jobs", g.jobs, "Worker threads");
  app.add_option("--seed", g.seed, "Seed for random corpora");
  app.add_option("--budget-states", g.states, "Enumeration state budget");
  app.add_option("--iso-max", g.iso_max, "Vertex bound for isomorphism tasks");

  RunConfig cfg;
  std::function<void()> action;
  auto emit = [](const Json& j) { std::cout << dump(j); };

  // count
  auto* count = app.add_subcommand("count", "Count homomorphisms G -> H (pins in G allowed)");
  std::string g_path, h_path;
  std::optional<std::uint64_t> mod;
  count->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  count->add_option("H", h_path)->required()->check(CLI::ExistingFile);
  count->add_option("--mod", mod, "Prime, or squarefree composite assembled by CRT");
  count->callback([&] {
    action = [&] {
      Graph h = load_simple(h_path);
      PartiallyLabelledGraph j = parse_labelled_graph(read_text_file(g_path)).for_homs(h.n());
      Json out;
      if (mod && !is_prime(*mod)) {
        if (!j.pins.empty()) throw InputError("composite moduli are supported for unpinned counts only");
        out = to_json(count_homs_mod_composite(j.base, h, *mod, cfg.budget));
      } else {
        out = to_json(count_homs(j, h, mod, cfg.budget));
      }
      out["instance"] = {{"G", g_path}, {"H", h_path}};
      emit(out);
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Order-p reduced form with the step trace");
  std::uint64_t p = 0;
  bool all_paths = false;
  reduce->add_option("H", h_path)->required()->check(CLI::ExistingFile);
  reduce->add_option("--p", p)->required();
  reduce->add_flag("--all-paths", all_paths, "Explore every automorphism choice");
  reduce->callback([&] {
    action = [&] {
      require_prime(p);
      auto t = reduced_form(load_simple(h_path), p, all_paths ? TieBreak::all_paths : TieBreak::deterministic,
                            cfg.budget);
      emit(to_json(t));
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "Tree dichotomy verdict with certificate");
  cls->add_option("H", h_path)->required()->check(CLI::ExistingFile);
  cls->add_option("--p", p)->required();
  cls->callback([&] {
    action = [&] {
      require_prime(p);
      emit(to_json(classify(load_simple(h_path), p, cfg.budget)));
    };
  });

  // wbis
  auto* wbis = app.add_subcommand("wbis", "Weighted bipartite independent sets");
  wbis->require_subcommand(1);
  long long ll = 1, lr = 1;
  auto weight_opts = [&](CLI::App* sub) {
    sub->add_option("--ll", ll, "Left weight")->required();
    sub->add_option("--lr", lr, "Right weight")->required();
    sub->add_option("--p", p)->required();
  };
  std::string cnf_path;
  bool exact = false, split = false;
  auto* wz = wbis->add_subcommand("z", "Evaluate Z_{ll,lr}(G)");
  wz->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  weight_opts(wz);
  wz->add_flag("--exact", exact, "Also report the integer value");
  wz->add_flag("--split", split, "Report the left/right/mixed split");
  wz->callback([&] {
    action = [&] {
      BipartiteGraph bg = load_bip(g_path);
      auto w = weights_from(ll, lr, p);
      Json out = {{"z", z_wbis(bg, w, cfg.budget).value()}, {"p", p}, {"lambda_l", w.lambda_l},
                  {"lambda_r", w.lambda_r}};
      if (exact) out["exact"] = big_to_string(z_wbis_exact(bg, ll, lr, cfg.budget));
      if (split) {
        auto s = split_sum_report(bg, w, cfg.budget);
        out["split"] = {{"left_only", s.left_only}, {"right_only", s.right_only}, {"mixed", s.mixed},
                        {"total", s.total}};
      }
      emit(out);
    };
  });
  auto* wg = wbis->add_subcommand("gadget", "Cancellation gadget for the given weights");
  weight_opts(wg);
  wg->callback([&] { action = [&] { emit(to_json(select_gadget(weights_from(ll, lr, p), cfg.budget))); }; });
  auto* ws = wbis->add_subcommand("sat-reduce", "Build G_phi from a DIMACS formula");
  ws->add_option("phi", cnf_path)->required()->check(CLI::ExistingFile);
  weight_opts(ws);
  ws->callback([&] {
    action = [&] {
      CnfFormula phi = parse_dimacs_cnf(read_text_file(cnf_path));
      auto w = weights_from(ll, lr, p);
      GPhi gp = build_G_phi(phi, w, cfg.budget);
      emit({{"construction", to_json(gp)}, {"report", to_json(verify_sat_reduction(phi, w, 64, cfg.budget))}});
    };
  });

  // spin
  auto* spin = app.add_subcommand("spin", "Two-spin partition functions and gadget search");
  spin->require_subcommand(1);
  long long gamma = 0, lambda = 0;
  std::optional<int> max_m, entry_cap;
  bool sweep = false;
  auto spin_opts = [&](CLI::App* sub, bool required) {
    auto* og = sub->add_option("--gamma", gamma);
    auto* ol = sub->add_option("--lambda", lambda);
    if (required) {
      og->required();
      ol->required();
    }
    sub->add_option("--p", p)->required();
  };
  auto bounds = [&] {
    SearchBounds b;
    b.max_m = max_m ? *max_m : cfg.spin_max_m;
    b.entry_cap = entry_cap ? *entry_cap : cfg.spin_entry_cap;
    if (b.max_m < 0 || b.entry_cap < 0) throw InputError("search bounds must be non-negative");
    return b;
  };
  auto* sz = spin->add_subcommand("z", "Evaluate Z_{gamma,lambda} on a multigraph (pins 0/1 allowed)");
  sz->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  spin_opts(sz, true);
  sz->callback([&] {
    action = [&] {
      auto sp = SpinParams::make(gamma, lambda, p);
      PinnedSpinGraph j = parse_labelled_graph(read_text_file(g_path)).for_spin();
      emit({{"z", z_spin(j, sp, cfg.budget).value()}, {"p", p}, {"gamma", sp.gamma}, {"lambda", sp.lambda}});
    };
  });
  auto* sc = spin->add_subcommand("classify", "Easy/Hard/Unknown verdict for (gamma, lambda)");
  spin_opts(sc, true);
  sc->add_option("--max-m", max_m);
  sc->add_option("--entry-cap", entry_cap);
  sc->callback([&] {
    action = [&] {
      auto sp = SpinParams::make(gamma, lambda, p);
      Json out = to_json(classify_spin(sp, bounds()));
      out["p"] = p;
      out["gamma"] = sp.gamma;
      out["lambda"] = sp.lambda;
      emit(out);
    };
  });
  auto* ss = spin->add_subcommand("search", "Gadget vector search");
  spin_opts(ss, false);
  ss->add_option("--max-m", max_m);
  ss->add_option("--entry-cap", entry_cap);
  ss->add_flag("--sweep", sweep, "CSV over every (gamma, lambda) for this p");
  ss->callback([&] {
    action = [&] {
      require_prime(p);
      if (sweep) {
        std::cout << spin_sweep_csv(p, bounds(), cfg.jobs);
        return;
      }
      if (ss->count("--gamma") == 0 || ss->count("--lambda") == 0)
        throw InputError("--gamma and --lambda are required without --sweep");
      auto sp = SpinParams::make(gamma, lambda, p);
      Json out = to_json(search_gadget(sp, bounds()));
      out["p"] = p;
      out["gamma"] = sp.gamma;
      out["lambda"] = sp.lambda;
      emit(out);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a reduction identity on one instance");
  verify->require_subcommand(1);
  auto* vw = verify->add_subcommand("wbis-to-homs", "|Hom(J,H)| against Z_{a-1,b-1}(G)");
  vw->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  vw->add_option("H", h_path)->required()->check(CLI::ExistingFile);
  vw->add_option("--p", p)->required();
  vw->callback([&] {
    action = [&] {
      Json out = to_json(verify_wbis_to_homs(load_bip(g_path), load_simple(h_path), p, 2'000'000, cfg.budget));
      out["instance"] = {{"G", g_path}, {"H", h_path}, {"p", p}};
      emit(out);
    };
  });
  auto* vs = verify->add_subcommand("sat-to-wbis", "Z(G_phi) against K * #sat(phi)");
  vs->add_option("phi", cnf_path)->required()->check(CLI::ExistingFile);
  weight_opts(vs);
  vs->callback([&] {
    action = [&] {
      CnfFormula phi = parse_dimacs_cnf(read_text_file(cnf_path));
      Json out = to_json(verify_sat_reduction(phi, weights_from(ll, lr, p), 64, cfg.budget));
      out["instance"] = {{"phi", cnf_path}, {"p", p}, {"lambda_l", ll}, {"lambda_r", lr}};
      emit(out);
    };
  });
  auto* vc = verify->add_subcommand("connbis", "|I(G)| + 2^|V_R| against |I(G')|");
  vc->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  vc->callback([&] {
    action = [&] {
      Json out = to_json(connbis_transform(load_bip(g_path), cfg.budget));
      out["instance"] = {{"G", g_path}};
      emit(out);
    };
  });
  auto* vp = verify->add_subcommand("p4", "2|I(G)| against |Hom(G,P4)|");
  vp->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  vp->callback([&] {
    action = [&] {
      Json out = to_json(verify_p4_identity(load_bip(g_path), 2'000'000, cfg.budget));
      out["instance"] = {{"G", g_path}};
      emit(out);
    };
  });
  auto* vr = verify->add_subcommand("reduction-congruence", "|Hom(G,H)| against |Hom(G,H*p)| mod p");
  vr->add_option("G", g_path)->required()->check(CLI::ExistingFile);
  vr->add_option("H", h_path)->required()->check(CLI::ExistingFile);
  vr->add_option("--p", p)->required();
  vr->callback([&] {
    action = [&] {
      require_prime(p);
      Graph gg = load_simple(g_path), h = load_simple(h_path);
      auto t = reduced_form(h, p, TieBreak::deterministic, cfg.budget);
      auto lhs = count_homs(gg, h, p, cfg.budget).residue->value();
      auto rhs = count_homs(gg, t.result, p, cfg.budget).residue->value();
      emit({{"instance", {{"G", g_path}, {"H", h_path}, {"p", p}}},
            {"lhs", lhs},
            {"rhs", rhs},
            {"ok", lhs == rhs},
            {"reduced_form", to_json(t.result)}});
    };
  });

  // atlas
  auto* atlas = app.add_subcommand("atlas", "Verdicts for every tree up to max-n vertices");
  int max_n = 8;
  std::string primes_csv;
  atlas->add_option("--max-n", max_n)->check(CLI::Range(1, 12));
  atlas->add_option("--primes", primes_csv, "Comma-separated primes");
  atlas->callback([&] {
    action = [&] {
      if (!primes_csv.empty()) cfg.primes = parse_prime_list(primes_csv);
      emit(atlas_table(max_n, cfg.primes, cfg.jobs, cfg.budget));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!g.config_path.empty()) apply_config_json(cfg, read_text_file(g.config_path));
    apply_environment(cfg);
    if (g.jobs) cfg.jobs = *g.jobs;
    if (g.seed) cfg.seed = *g.seed;
    if (g.states) cfg.budget.enumeration_states = *g.states;
    if (g.iso_max) cfg.budget.iso_max_vertices = *g.iso_max;
    cfg.validate();
    action();
  } catch (const BudgetExceeded& e) {
    std::cerr << dump(Json{{"error", "budget"}, {"message", e.what()}});
    return 2;
  } catch (const InputError& e) {
    std::cerr << dump(Json{{"error", "input"}, {"message", e.what()}});
    return 1;
  }
  return 0;
}
