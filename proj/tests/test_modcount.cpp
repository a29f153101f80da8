#include <doctest.h>

#include "helpers.hpp"
#include "modhom/errors.hpp"
#include "modhom/homcount.hpp"
#include "modhom/reduction.hpp"
#include "modhom/vectors.hpp"
#include "oracles.hpp"

using namespace modhom;
using namespace fixtures;

namespace {

std::uint64_t exact_u64(const HomCount& c) { return static_cast<std::uint64_t>(*c.exact); }

DistinguishedGraph random_marked(int n, int r, Rng& rng) {
  DistinguishedGraph g{random_graph(n, 0.5, rng), {}};
  // Distinct marks, so gluing two graphs never creates a loop.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  g.marks.assign(order.begin(), order.begin() + std::min(r, n));
  return g;
}

}  // namespace

TEST_SUITE("modcount") {
  TEST_CASE("count examples") {
    Graph p4 = path(4);
    CHECK(exact_u64(count_homs(Graph(1), p4, std::nullopt)) == 4);
    CHECK(exact_u64(count_homs(complete(2), p4, std::nullopt)) == 6);
    PartiallyLabelledGraph pinned{complete(2), {{0, 0}}};
    CHECK(exact_u64(count_homs(pinned, p4, std::nullopt)) == 1);
    auto both = count_homs(complete(2), p4, 5);
    CHECK(both.residue->value() == 1);
    CHECK_FALSE(both.exact.has_value());
  }

  TEST_CASE("empty graphs") {
    CHECK(exact_u64(count_homs(Graph(0), Graph(0), std::nullopt)) == 1);
    CHECK(exact_u64(count_homs(Graph(2), Graph(0), std::nullopt)) == 0);
    CHECK(exact_u64(count_homs(Graph(0), path(3), std::nullopt)) == 1);
  }

  TEST_CASE("pins are validated") {
    CHECK_THROWS_AS(count_homs(PartiallyLabelledGraph{complete(2), {{0, 7}}}, path(3), std::nullopt), InputError);
    CHECK_THROWS_AS(count_homs(PartiallyLabelledGraph{complete(2), {{5, 0}}}, path(3), std::nullopt), InputError);
    CHECK(count_homs_mod(path(3), {0, 0}, {0, 1}, path(3), 5) == 0);
  }

  TEST_CASE("budget is enforced") {
    Budget b;
    b.enumeration_states = 50;
    CHECK_THROWS_AS(count_homs(path(8), complete(5), std::nullopt, b), BudgetExceeded);
  }

  TEST_CASE("exact and modular counts agree with flat enumeration") {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
      Graph g = random_graph(1 + t % 6, 0.45, rng);
      Graph h = random_graph(1 + (t / 6) % 5, 0.6, rng);
      std::map<int, int> pins;
      if (t % 3 == 0) pins[static_cast<int>(rng() % g.n())] = static_cast<int>(rng() % h.n());
      std::uint64_t expected = oracle::homs(g, h, pins);
      PartiallyLabelledGraph j{g, pins};
      CHECK(exact_u64(count_homs(j, h, std::nullopt)) == expected);
      for (std::uint64_t p : {2, 3, 5, 7}) CHECK(count_homs(j, h, p).residue->value() == expected % p);
    }
  }

  TEST_CASE("homomorphisms do not increase distances") {
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
      Graph g = random_graph(2 + t % 5, 0.5, rng);
      Graph h = random_tree(2 + t % 6, rng);
      std::vector<std::vector<int>> dg, dh;
      for (int v = 0; v < g.n(); ++v) dg.push_back(bfs_distances(g, v));
      for (int v = 0; v < h.n(); ++v) dh.push_back(bfs_distances(h, v));
      for_each_hom({g, {}}, h, [&](const std::vector<int>& s) {
        for (int u = 0; u < g.n(); ++u)
          for (int v = 0; v < g.n(); ++v)
            if (dg[u][v] >= 0) CHECK(dh[s[u]][s[v]] <= dg[u][v]);
        return true;
      });
    }
  }

  TEST_CASE("walk counts") {
    Graph p4 = path(4);
    CHECK(count_walks(p4, 1, 1, 0) == 1);
    CHECK(count_walks(p4, 1, 2, 0) == 0);
    CHECK(count_walks(p4, 0, 3, 3) == 1);
    auto m = walk_matrix(p4, 3);
    BigInt total = 0;
    for (auto& row : m)
      for (auto& x : row) total += x;
    CHECK(total == 16);
    auto mm = walk_matrix_mod(p4, 5, 3);
    auto me = walk_matrix(p4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(mm[i][j] == static_cast<std::uint64_t>(me[i][j] % 3));
  }

  TEST_CASE("walks equal pinned path homomorphisms") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
      Graph h = random_graph(2 + t % 5, 0.5, rng);
      for (int k = 0; k <= 6; ++k) {
        Graph pk = path(k + 1);
        for (int x = 0; x < h.n(); ++x)
          for (int y = 0; y < h.n(); ++y) {
            if (k == 0 && x != y) continue;
            std::uint64_t pinned = oracle::homs(pk, h, {{0, x}, {k, y}});
            CHECK(count_walks(h, x, y, k) == pinned);
          }
      }
    }
  }

  TEST_CASE("inner walk count along a tree path") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
      Graph h = random_tree(3 + t % 7, rng);
      int s = static_cast<int>(rng() % h.n()), e = static_cast<int>(rng() % h.n());
      auto d = bfs_distances(h, e);
      int k = d[s];
      if (k < 2) continue;
      std::vector<int> q{s};
      while (q.back() != e)
        for (int w : h.neighbors(q.back()))
          if (d[w] == d[q.back()] - 1) {
            q.push_back(w);
            break;
          }
      long long sum = 0;
      for (int i = 1; i <= k - 1; ++i) sum += h.degree(q[i]);
      CHECK(count_walks(h, q[1], q[k - 1], k) == sum - (k - 2));
    }
  }

  TEST_CASE("subdivided counting") {
    Skeleton k2 = Skeleton::make(2, {{0, 1, 1}});
    CHECK(count_homs_subdivided(k2, {}, path(4), 7).value() == 6);
    Skeleton k2_3 = Skeleton::make(2, {{0, 1, 3}});
    CHECK(count_homs_subdivided(k2_3, {}, path(4), 17).value() == 16);
    CHECK(expand_skeleton(k2_3).n() == 4);

    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
      Graph base = random_graph(2 + t % 4, 0.6, rng);
      std::vector<std::tuple<int, int, int>> es;
      for (auto [u, v] : base.edges()) es.emplace_back(u, v, 1 + static_cast<int>(rng() % 3));
      Skeleton sk = Skeleton::make(base.n(), es);
      Graph h = random_tree(2 + t % 5, rng);
      std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[t % 4];
      std::map<int, int> pins{{0, static_cast<int>(rng() % h.n())}};
      Graph full = expand_skeleton(sk);
      CHECK(count_homs_subdivided(sk, pins, h, p).value() == count_homs({full, pins}, h, p).residue->value());
    }
    Budget b;
    b.skeleton_max_free = 1;
    CHECK_THROWS_AS(count_homs_subdivided(Skeleton::make(3, {{0, 1, 2}, {1, 2, 2}}), {}, path(3), 3, b),
                    BudgetExceeded);
  }

  TEST_CASE("tuple vectors") {
    Graph p4 = path(4);
    auto ones = tuple_vector({Graph(2), {0, 1}}, p4, 3, false);
    CHECK(ones.entries == std::vector<std::uint64_t>(16, 1));
    auto deg = tuple_vector({complete(2), {0}}, p4, 3, false);
    CHECK(deg.entries == std::vector<std::uint64_t>{1, 2, 2, 1});
    CHECK(deg.legend()[2] == std::vector<int>{2});
    CHECK_THROWS_AS(tuple_vector({complete(2), {0}}, p4, 2, true), InputError);
    auto contracted = tuple_vector({complete(2), {0}}, p4, 3, true);
    CHECK(contracted.entries == std::vector<std::uint64_t>{1, 2});
    CHECK(contracted.orbit_sizes == std::vector<std::uint64_t>{2, 2});
  }

  TEST_CASE("sum of tuple vector equals the unpinned count") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
      auto g = random_marked(1 + t % 5, 1 + t % 2, rng);
      Graph h = random_graph(2 + t % 4, 0.5, rng);
      for (std::uint64_t p : {2, 3, 5}) {
        auto v = tuple_vector(g, h, p, false);
        std::uint64_t sum = 0;
        for (auto x : v.entries) sum = (sum + x) % p;
        CHECK(sum == count_homs(g.base, h, p).residue->value());
      }
    }
  }

  TEST_CASE("contracted entries are class constants") {
    Rng rng(37);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 20; ++t) {
      Graph h = random_tree(3 + t % 5, rng);
      std::uint64_t p = t % 2 ? 3 : 5;
      if (find_order_p_automorphism(h, p).has_value()) continue;
      auto g = random_marked(2 + t % 3, 1 + t % 2, rng);
      auto full = tuple_vector(g, h, p, false);
      auto con = tuple_vector(g, h, p, true);
      for (std::size_t i = 0; i < full.entries.size(); ++i) CHECK(con.entries[con.index_map[i]] == full.entries[i]);
      ++checked;
    }
    CHECK(checked > 0);
  }

  TEST_CASE("vector algebra") {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
      int r = 1 + t % 2;
      auto a = random_marked(r + t % 4, r, rng);
      auto b = random_marked(r + (t / 2) % 4, r, rng);
      Graph h = random_graph(2 + t % 3, 0.6, rng);
      std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[t % 3];
      auto va = tuple_vector(a, h, p, false), vb = tuple_vector(b, h, p, false);
      auto glued = identify_marks(a, b);
      CHECK(vec_combine(VecOp::mul, va, vb).entries == tuple_vector(glued, h, p, false).entries);
      auto one = tuple_vector({Graph(r), [r] {
                                 std::vector<int> m(r);
                                 std::iota(m.begin(), m.end(), 0);
                                 return m;
                               }()},
                              h, p, false);
      CHECK(vec_combine(VecOp::mul, va, one).entries == va.entries);
      auto zero = vec_combine(VecOp::add, va, vec_scale(va, p - 1));
      CHECK(zero.entries == std::vector<std::uint64_t>(va.entries.size(), 0));
    }
    auto x = tuple_vector({Graph(1), {0}}, path(3), 3, false);
    auto y = tuple_vector({Graph(1), {0}}, path(3), 5, false);
    CHECK_THROWS_AS(vec_combine(VecOp::add, x, y), InputError);
  }

  TEST_CASE("distinguishers") {
    Graph p4 = path(4);
    auto d = find_distinguisher(p4, {0}, {1}, 3, 3);
    REQUIRE(d.has_value());
    CHECK(d->probe.base.m() == 1);
    CHECK(d->value_a == 1);
    CHECK(d->value_b == 2);
    CHECK_THROWS_AS(find_distinguisher(p4, {0}, {3}, 3, 3), InputError);
    auto hub = find_distinguisher(two_hub_tree(), {0}, {1}, 5, 3);
    REQUIRE(hub.has_value());
    CHECK(hub->probe.base.m() == 1);
    CHECK(hub->value_a == 4);
    CHECK(hub->value_b == 3);
  }

  TEST_CASE("connected probes") {
    CHECK(connected_probes(0).size() == 1);
    CHECK(connected_probes(1).size() == 1);
    for (int e = 1; e <= 3; ++e)
      for (const auto& g : connected_probes(e)) {
        CHECK(static_cast<int>(g.m()) == e);
        CHECK(is_connected(g));
      }
  }
}
