#include <doctest.h>

#include "helpers.hpp"
#include "modhom/errors.hpp"
#include "modhom/graph_io.hpp"
#include "modhom/iso.hpp"
#include "oracles.hpp"

using namespace modhom;
using namespace fixtures;

TEST_SUITE("graph-core") {
  TEST_CASE("parse simple, multi and bipartite files") {
    Graph k2 = parse_simple_graph("p graph 2 1\ne 1 2\n");
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);
    CHECK_THROWS_AS(parse_simple_graph("p graph 2 2\ne 1 2\ne 1 2\n"), InputError);
    Multigraph mg = parse_multigraph("p multi 2 2\ne 1 2\ne 1 2\n");
    REQUIRE(mg.bundles().size() == 1);
    CHECK(mg.bundles()[0].multiplicity == 2);
    CHECK(parse_multigraph("p multi 1 1\ne 1 1\n").bundles()[0].u == 0);
    CHECK_THROWS_AS(parse_simple_graph("p graph 1 1\ne 1 1\n"), InputError);

    BipartiteGraph b = parse_bipartite_graph("p bip 3 2\nl 1\ne 1 2\ne 1 3\n");
    CHECK(b.left() == std::vector<int>{0});
    CHECK(b.right() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(parse_bipartite_graph("p bip 3 1\nl 1\nl 2\ne 1 2\n"), InputError);
  }

  TEST_CASE("parse errors carry line numbers") {
    try {
      parse_simple_graph("c hello\np graph 2 1\ne 1 5\n");
      FAIL("expected an error");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
    }
    CHECK_THROWS_AS(parse_simple_graph("p graph 2 2\ne 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_simple_graph("e 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_simple_graph("p graph 2 1\ne 1 2 3\n"), InputError);
    CHECK_THROWS_AS(parse_simple_graph("p graph 2 1\nx 1 2\n"), InputError);
  }

  TEST_CASE("labelled files bind pins to homs or spins") {
    auto f = parse_labelled_graph("p graph 2 1\ne 1 2\npin 1 3\n");
    auto j = f.for_homs(4);
    CHECK(j.pins.at(0) == 2);
    CHECK_THROWS_AS(f.for_homs(2), InputError);
    CHECK_THROWS_AS(f.for_spin(), InputError);
    auto s = parse_labelled_graph("p multi 2 2\ne 1 2\ne 2 2\npin 2 1\n").for_spin();
    CHECK(s.pins.at(1) == 1);
  }

  TEST_CASE("format round trip") {
    Graph g = two_hub_tree();
    CHECK(parse_simple_graph(format_graph(g)) == g);
    BipartiteGraph b = bip_k2();
    BipartiteGraph b2 = parse_bipartite_graph(format_bipartite(b));
    CHECK(b2.sides() == b.sides());
  }

  TEST_CASE("structure reports") {
    auto p4 = analyze_structure(path(4));
    CHECK(p4.is_tree);
    CHECK_FALSE(p4.is_star);
    CHECK(analyze_structure(star(3)).is_star);
    CHECK(analyze_structure(Graph(1)).is_star);
    auto tri = analyze_structure(complete(3));
    CHECK_FALSE(tri.bipartition.has_value());
    CHECK(analyze_structure(complete_bipartite(2, 3)).complete_bipartite[0]);
    CHECK(analyze_structure(Graph(0)).components.empty());
  }

  TEST_CASE("bipartition colours every edge, odd walks otherwise") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      Graph g = random_graph(1 + t % 8, 0.35, rng);
      auto r = analyze_structure(g);
      if (r.bipartition) {
        for (auto [u, v] : g.edges()) CHECK((*r.bipartition)[u] != (*r.bipartition)[v]);
        CHECK(find_odd_closed_walk(g).empty());
      } else {
        auto w = find_odd_closed_walk(g);
        REQUIRE(w.size() >= 4);
        CHECK(w.front() == w.back());
        CHECK((w.size() - 1) % 2 == 1);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(g.adjacent(w[i], w[i + 1]));
      }
    }
  }

  TEST_CASE("isomorphism examples") {
    Graph p4 = path(4);
    CHECK(are_isomorphic({p4, {0}}, {p4, {3}}));
    CHECK_FALSE(are_isomorphic({p4, {0}}, {p4, {1}}));
    CHECK_FALSE(are_isomorphic(complete(3), star(2)));
    CHECK_THROWS_AS(are_isomorphic(path(13), path(13)), BudgetExceeded);
  }

  TEST_CASE("isomorphism agrees with permutation search") {
    Rng rng(5);
    for (int t = 0; t < 150; ++t) {
      int n = 1 + t % 6;
      Graph a = random_graph(n, 0.5, rng);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph b = t % 2 ? a.relabelled(perm) : random_graph(n, 0.5, rng);
      std::vector<int> ma{static_cast<int>(rng() % n)}, mb{static_cast<int>(rng() % n)};
      CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
      CHECK(are_isomorphic({a, ma}, {b, mb}) == oracle::isomorphic(a, b, ma, mb));
    }
  }

  TEST_CASE("isomorphism is an equivalence relation on random triples") {
    Rng rng(8);
    for (int t = 0; t < 60; ++t) {
      int n = 2 + t % 6;
      Graph a = random_graph(n, 0.5, rng);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph b = a.relabelled(perm);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph c = t % 3 ? b.relabelled(perm) : random_graph(n, 0.5, rng);
      CHECK(are_isomorphic(a, a));
      CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
      if (are_isomorphic(a, b) && are_isomorphic(b, c)) CHECK(are_isomorphic(a, c));
    }
  }

  TEST_CASE("automorphism groups") {
    CHECK(automorphism_group(complete(2)).size() == 2);
    auto p4 = automorphism_group(path(4));
    REQUIRE(p4.size() == 2);
    CHECK(p4[0].is_identity());
    CHECK(p4[1].order() == 2);
    CHECK(p4[1].fixed_points().empty());
    CHECK(p4[1].cycle_notation() == "(1 4)(2 3)");
    CHECK(automorphism_group(star(3)).size() == 6);
  }

  TEST_CASE("automorphism groups match brute force and are closed") {
    Rng rng(3);
    for (int t = 0; t < 80; ++t) {
      int n = 1 + t % 6;
      Graph g = random_graph(n, 0.4, rng);
      auto group = automorphism_group(g);
      auto brute = oracle::automorphisms(g);
      REQUIRE(group.size() == brute.size());
      std::set<std::vector<int>> members;
      for (std::size_t i = 0; i < group.size(); ++i) {
        CHECK(group[i].images() == brute[i]);
        CHECK(static_cast<int>(group[i].order()) == oracle::perm_order(brute[i]));
        members.insert(group[i].images());
      }
      long long fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      CHECK(fact % static_cast<long long>(group.size()) == 0);
      for (const auto& a : group)
        for (const auto& b : group) CHECK(members.count(a.compose(b).images()) == 1);
    }
  }

  TEST_CASE("permutations") {
    Permutation r({1, 2, 0, 4, 3});
    CHECK(r.order() == 6);
    CHECK(r.cycle_notation() == "(1 2 3)(4 5)");
    CHECK(r.compose(r.inverse()).is_identity());
    CHECK(Permutation::identity(3).cycle_notation() == "()");
    CHECK_THROWS_AS(Permutation({0, 0}), InputError);
  }
}
