#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "geocover/errors.hpp"
#include "geocover/graph.hpp"
#include "geocover/standard_graphs.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace geocover;
using testutil::from_edges;
using testutil::standard;

namespace {

// Directed simple walks with >= 1 edge, counted by plain DFS over edge ids.
// Each undirected path is seen once from each end.
std::size_t dfs_path_count(const Multigraph& g) {
  std::size_t count = 0;
  std::vector<char> on(g.num_vertices(), 0);
  std::function<void(VertexId)> go = [&](VertexId v) {
    on[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.edge(e).other(v);
      if (g.edge(e).is_loop() || on[static_cast<std::size_t>(w)]) continue;
      ++count;
      go(w);
    }
    on[static_cast<std::size_t>(v)] = 0;
  };
  for (std::size_t v = 0; v < g.num_vertices(); ++v) go(static_cast<VertexId>(v));
  return count / 2;
}

bool is_group(const std::vector<Automorphism>& grp) {
  std::set<Automorphism> s(grp.begin(), grp.end());
  if (s.size() != grp.size()) return false;
  for (const auto& a : grp) {
    if (!s.count(a.inverse())) return false;
    for (const auto& b : grp) {
      if (!s.count(a.then(b))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("standard graphs have the expected sizes") {
  auto k5 = standard("complete", {5});
  CHECK(k5.num_vertices() == 5);
  CHECK(k5.num_edges() == 10);

  auto k33 = standard("complete_bipartite", {3, 3});
  CHECK(k33.num_vertices() == 6);
  CHECK(k33.num_edges() == 9);

  auto cat = standard("caterpillar", {3});
  CHECK(cat.num_vertices() == 8);
  CHECK(cat.num_edges() == 7);
  CHECK(cat.leaf_count() == 4);

  // Two triangles along a base b0 b1 b2: 3 base + 2 peaks, 3 edges each.
  auto saw = standard("sawtooth", {2});
  CHECK(saw.num_vertices() == 5);
  CHECK(saw.num_edges() == 6);
  auto tri = standard("sawtooth", {1});
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.num_edges() == 3);
  CHECK(tri.max_degree() == 2);

  auto bq = standard("bouquet", {1});
  CHECK(bq.num_vertices() == 1);
  CHECK(bq.degree(0) == 2);
  CHECK(bq.isolated_loop_count() == 1);
}

TEST_CASE("standard graph errors name the bad value") {
  CHECK_THROWS_AS(standard("petersen", {}), ContractError);
  CHECK_THROWS_WITH_AS(standard("complete", {0}), doctest::Contains("0"), ContractError);
  CHECK_THROWS_AS(standard("complete_bipartite", {2}), ContractError);
}

TEST_CASE("handshake identity") {
  for (const auto& tag : standard_graph_tags()) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> params{n};
      if (tag == "complete_bipartite") params.push_back(n + 1);
      auto g = build_standard(tag, params);
      int sum = 0;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) sum += g.degree(static_cast<VertexId>(v));
      CHECK(sum == 2 * static_cast<int>(g.num_edges()));
    }
  }
}

TEST_CASE("two_subdivision sizes and contraction round trip") {
  auto k4 = standard("complete", {4});
  auto sg = two_subdivision(k4);
  CHECK(sg.graph.num_vertices() == 10);
  CHECK(sg.num_segments() == 12);

  auto p2 = two_subdivision(standard("path", {1}));
  CHECK(p2.graph.num_vertices() == 3);
  CHECK(p2.num_segments() == 2);

  auto loop = two_subdivision(standard("bouquet", {1}));
  CHECK(loop.graph.num_vertices() == 2);
  CHECK(loop.num_segments() == 2);
  CHECK(loop.graph.multiplicity(0, 1) == 2);

  // Contract each midpoint back into an edge between its two neighbours.
  for (auto g : {k4, standard("sawtooth", {2}), standard("bouquet", {2}),
                 from_edges(2, {{0, 1}, {0, 1}, {1, 1}})}) {
    auto s = two_subdivision(g);
    Multigraph back;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) back.add_vertex(g.name(static_cast<VertexId>(v)));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const VertexId m = s.midpoint_of[e];
      CHECK_FALSE(s.is_original(m));
      CHECK(s.graph.degree(m) == 2);
      const auto& a = s.graph.edge(static_cast<EdgeId>(2 * e));
      const auto& b = s.graph.edge(static_cast<EdgeId>(2 * e + 1));
      back.add_edge(a.other(m), b.other(m));
    }
    REQUIRE(back.num_edges() == g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      CHECK(back.edge(static_cast<EdgeId>(e)) == g.edge(static_cast<EdgeId>(e)));
    }
  }
}

TEST_CASE("segment names round trip") {
  auto sg = two_subdivision(from_edges(2, {{0, 1}, {0, 1}, {1, 1}}));
  for (std::size_t s = 0; s < sg.num_segments(); ++s) {
    const auto name = sg.segment_name(static_cast<EdgeId>(s));
    REQUIRE(sg.find_segment(name));
    CHECK(*sg.find_segment(name) == static_cast<EdgeId>(s));
  }
}

TEST_CASE("simple path enumeration") {
  auto p2 = two_subdivision(standard("path", {1}));
  auto pool = enumerate_simple_paths(p2);
  CHECK(pool.size() == 3);

  auto c3 = two_subdivision(standard("cycle", {3}));
  auto c3_pool = enumerate_simple_paths(c3);
  CHECK(c3_pool.size() == dfs_path_count(c3.graph));
  CHECK(c3_pool.size() == 30);

  auto k4 = two_subdivision(standard("complete", {4}));
  auto k4_pool = enumerate_simple_paths(k4);
  CHECK(k4_pool.size() == dfs_path_count(k4.graph));
  CHECK(k4_pool.size() == 270);  // golden

  for (const auto* pl : {&c3_pool, &k4_pool}) {
    CHECK(std::is_sorted(pl->begin(), pl->end()));
    CHECK(std::adjacent_find(pl->begin(), pl->end()) == pl->end());
  }
  for (const auto& p : k4_pool) CHECK(is_canonical_simple_path(k4.graph, p));

  CHECK_THROWS_AS(enumerate_simple_paths(k4, 10), LimitExceeded);
}

TEST_CASE("path counts match DFS on every small multigraph") {
  // All multigraphs on 3 vertices with up to 3 edges drawn from
  // {ab, ac, bc, aa}; subdivided they have at most 6 vertices.
  const std::vector<std::pair<int, int>> kinds{{0, 1}, {0, 2}, {1, 2}, {0, 0}};
  std::vector<int> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    Multigraph g = from_edges(3, {});
    for (int k : pick) g.add_edge(kinds[static_cast<std::size_t>(k)].first, kinds[static_cast<std::size_t>(k)].second);
    auto sg = two_subdivision(g);
    auto pool = enumerate_simple_paths(sg);
    CHECK(pool.size() == dfs_path_count(sg.graph));
    for (const auto& p : pool) CHECK(is_canonical_simple_path(sg.graph, p));
    if (left == 0) return;
    for (std::size_t k = from; k < kinds.size(); ++k) {
      pick.push_back(static_cast<int>(k));
      rec(k, left - 1);
      pick.pop_back();
    }
  };
  rec(0, 3);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(standard("complete", {4})).size() == 24);
  CHECK(automorphisms(standard("path", {2})).size() == 2);

  // Brute force over all 6! vertex permutations of K3,3.
  auto k33 = standard("complete_bipartite", {3, 3});
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  int brute = 0;
  do {
    bool ok = true;
    for (int u = 0; u < 6 && ok; ++u)
      for (int v = 0; v < 6 && ok; ++v)
        ok = k33.multiplicity(u, v) == k33.multiplicity(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    brute += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(brute == 72);
  auto grp = automorphisms(k33);
  CHECK(grp.size() == 72);
  CHECK(is_group(grp));

  // Parallel edges multiply the group: digon has 2 (swap ends) x 2 (swap edges).
  auto digon = from_edges(2, {{0, 1}, {0, 1}});
  auto dg = automorphisms(digon);
  CHECK(dg.size() == 4);
  CHECK(is_group(dg));

  CHECK_THROWS_AS(automorphisms(standard("path", {20})), LimitExceeded);
}

TEST_CASE("automorphisms permute the edge multiset") {
  for (auto g : {standard("sawtooth", {2}), standard("bouquet", {2}), from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}})}) {
    for (const auto& a : automorphisms(g)) {
      CHECK(is_automorphism(g, a));
      std::multiset<std::pair<VertexId, VertexId>> before, after;
      for (const auto& e : g.edges()) {
        before.insert(std::minmax(e.u, e.v));
        after.insert(std::minmax(a.vertex_perm[static_cast<std::size_t>(e.u)], a.vertex_perm[static_cast<std::size_t>(e.v)]));
      }
      CHECK(before == after);
    }
  }
}

TEST_CASE("lifted automorphisms") {
  auto k4 = standard("complete", {4});
  auto sk4 = two_subdivision(k4);
  auto id = lift_automorphism(Automorphism::identity(4, 6), sk4);
  CHECK(id.is_identity());

  auto p3 = standard("path", {2});
  auto sp3 = two_subdivision(p3);
  for (const auto& a : automorphisms(p3)) {
    if (a.is_identity()) continue;
    auto l = lift_automorphism(a, sp3);
    CHECK(l.vertex_perm[1] == 1);  // middle original vertex fixed
    CHECK(l.vertex_perm[static_cast<std::size_t>(sp3.midpoint_of[0])] == sp3.midpoint_of[1]);
    CHECK(l.vertex_perm[static_cast<std::size_t>(sp3.midpoint_of[1])] == sp3.midpoint_of[0]);
  }

  for (auto g : {k4, standard("complete_bipartite", {2, 3}), standard("bouquet", {2}),
                 from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}})}) {
    auto sg = two_subdivision(g);
    for (const auto& a : automorphisms(g)) {
      auto l = lift_automorphism(a, sg);
      // Exhaustive adjacency check, independent of is_automorphism.
      const auto n = sg.graph.num_vertices();
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          CHECK(sg.graph.multiplicity(static_cast<VertexId>(u), static_cast<VertexId>(v)) ==
                sg.graph.multiplicity(l.vertex_perm[u], l.vertex_perm[v]));
      CHECK(is_automorphism(sg.graph, l));
    }
  }
}

TEST_CASE("shortest path lengths") {
  auto sp2 = two_subdivision(standard("path", {1}));
  auto unit = Weighting::uniform(2);
  CHECK(*shortest_path_length(sp2, unit, 0, 0) == 0);
  CHECK(*shortest_path_length(sp2, unit, 0, 1) == 2);

  auto two = from_edges(2, {});
  CHECK_FALSE(shortest_path_length(two, Weighting::uniform(0), 0, 1).has_value());

  // K5 with the shortcut vertex e: edges inside {a,b,c,d} have length 2,
  // edges to e length 1.
  auto k5 = standard("complete", {5});
  auto sk5 = two_subdivision(k5);
  Weighting w = Weighting::uniform(sk5.num_segments());
  for (std::size_t e = 0; e < k5.num_edges(); ++e) {
    if (k5.edge(static_cast<EdgeId>(e)).v == 4) {
      w.weight[2 * e] = Rational(1, 2);
      w.weight[2 * e + 1] = Rational(1, 2);
    }
  }
  CHECK(*shortest_path_length(sk5, w, 0, 1) == 2);
  CHECK(*shortest_path_length(sk5, w, 0, 4) == 1);
}

TEST_CASE("triangle inequality on small weighted graphs") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  for (auto g : {standard("complete", {4}), standard("sawtooth", {2}), standard("caterpillar", {2}),
                 from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}})}) {
    auto sg = two_subdivision(g);
    REQUIRE(sg.graph.num_vertices() <= 15);
    for (int round = 0; round < 3; ++round) {
      Weighting w;
      for (std::size_t s = 0; s < sg.num_segments(); ++s) w.weight.emplace_back(num(rng), den(rng));
      for (auto& x : w.weight) x.canonicalize();
      const auto fw = oracle::all_pairs(sg.graph, w);
      const auto n = sg.graph.num_vertices();
      std::vector<std::vector<Distance>> d(n);
      for (std::size_t u = 0; u < n; ++u) {
        d[u] = shortest_path_lengths_from(sg.graph, w, static_cast<VertexId>(u));
        CHECK(d[u] == fw[u]);
      }
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (d[x][y] && d[y][z]) CHECK(*d[x][z] <= *d[x][y] + *d[y][z]);
    }
  }
}
