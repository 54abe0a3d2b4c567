#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "geocover/cover.hpp"
#include "geocover/errors.hpp"
#include "helpers.hpp"

using namespace geocover;
using testutil::from_edges;
using testutil::path_by_names;
using testutil::standard;

namespace {

Cover cover_of(const PathPool& pool, std::initializer_list<PathSeq> paths) {
  Cover c;
  for (const auto& p : paths) c.push_back(*pool.find(p));
  std::sort(c.begin(), c.end());
  return c;
}

std::set<std::vector<PathSeq>> as_path_sets(const std::vector<Cover>& covers, const PathPool& pool) {
  std::set<std::vector<PathSeq>> out;
  for (const auto& c : covers) {
    std::vector<PathSeq> ps;
    for (int i : c) ps.push_back(pool.path(i));
    std::sort(ps.begin(), ps.end());
    out.insert(ps);
  }
  return out;
}

// Triangle a b c with midpoints a-b, b-c, a-c.
Multigraph triangle() { return from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("covers_all_segments") {
  PathPool p2(two_subdivision(standard("path", {1})));
  CHECK_FALSE(covers_all_segments({}, p2));
  auto whole = path_by_names(p2.graph(), {"v0", "v0-v1", "v1"});
  CHECK(covers_all_segments(cover_of(p2, {whole}), p2));

  PathPool tri(two_subdivision(triangle()));
  auto x = path_by_names(tri.graph(), {"a", "a-b", "b", "b-c"});
  auto y = path_by_names(tri.graph(), {"b-c", "c", "a-c", "a"});
  auto c = cover_of(tri, {x, y});
  CHECK(covers_all_segments(c, tri));
  CHECK(is_retracted(c, tri));
  CHECK_FALSE(covers_all_segments(cover_of(tri, {x}), tri));
}

TEST_CASE("is_retracted") {
  PathPool p2(two_subdivision(standard("path", {1})));
  auto whole = path_by_names(p2.graph(), {"v0", "v0-v1", "v1"});
  CHECK(is_retracted(cover_of(p2, {whole}), p2));
  std::vector<PathSeq> twice{whole, whole};
  CHECK_FALSE(is_retracted(twice));

  // One path overhangs into a segment the other covers entirely: on the path
  // v0 v1 v2, the short path v1 .. v1-v2 ends inside the long one.
  PathPool p3(two_subdivision(standard("path", {2})));
  auto longp = path_by_names(p3.graph(), {"v0", "v0-v1", "v1", "v1-v2", "v2"});
  auto overhang = path_by_names(p3.graph(), {"v1", "v1-v2", "v2"});
  CHECK_FALSE(is_retracted(cover_of(p3, {longp, overhang}), p3));
  auto tail = path_by_names(p3.graph(), {"v0-v1", "v1", "v1-v2"});
  CHECK_FALSE(is_retracted(cover_of(p3, {longp, tail}), p3));
}

TEST_CASE("find_covers small cases") {
  PathPool p2(two_subdivision(standard("path", {1})));
  auto c = find_covers(p2, 1);
  REQUIRE(c.size() == 1);
  CHECK(p2.path(c[0][0]) == path_by_names(p2.graph(), {"v0", "v0-v1", "v1"}));

  PathPool tri(two_subdivision(triangle()));
  CHECK(find_covers(tri, 1).empty());
  CHECK_FALSE(find_covers(tri, 2).empty());
}

TEST_CASE("find_covers on K4 contains the unit-length figure cover") {
  PathPool k4(two_subdivision(standard("complete", {4})));
  const auto& sg = k4.graph();
  auto fig = cover_of(k4, {
                              path_by_names(sg, {"a-b", "a", "a-d", "d"}),
                              path_by_names(sg, {"a", "a-c", "c", "c-d"}),
                              path_by_names(sg, {"c-d", "d", "b-d", "b"}),
                              path_by_names(sg, {"c", "b-c", "b", "a-b"}),
                          });
  auto covers = find_covers(k4, 4);
  CHECK_FALSE(covers.empty());
  CHECK(std::binary_search(covers.begin(), covers.end(), fig));
  CHECK(std::is_sorted(covers.begin(), covers.end()));
  for (const auto& cv : covers) {
    CHECK(covers_all_segments(cv, k4));
    CHECK(is_retracted(cv, k4));
  }
  CHECK_THROWS_AS(find_covers(k4, 4, 100), LimitExceeded);
}

TEST_CASE("find_covers does not depend on pool order") {
  for (auto g : {standard("complete_bipartite", {2, 3}), standard("sawtooth", {2}), triangle()}) {
    auto sg = two_subdivision(g);
    PathPool sorted(sg);
    std::vector<PathSeq> shuffled(sorted.paths().begin(), sorted.paths().end());
    std::mt19937 rng(7);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    PathPool other(sg, shuffled);
    CHECK(as_path_sets(find_covers(sorted, 3), sorted) == as_path_sets(find_covers(other, 3), other));
  }
}

TEST_CASE("apply_symmetry") {
  PathPool p3(two_subdivision(standard("path", {2})));
  const auto& sg = p3.graph();
  auto group = lifted_automorphisms(sg);
  REQUIRE(group.size() == 2);
  auto left = path_by_names(sg, {"v0", "v0-v1", "v1"});
  auto right = path_by_names(sg, {"v1", "v1-v2", "v2"});
  auto halves = cover_of(p3, {left, right});
  for (const auto& a : group) CHECK(apply_symmetry(a, halves, p3) == halves);

  // Two mirror-image covers: exactly one is symmetry-minimal.
  auto c1 = cover_of(p3, {path_by_names(sg, {"v0", "v0-v1", "v1", "v1-v2"}),
                          path_by_names(sg, {"v1-v2", "v2"})});
  auto c2 = cover_of(p3, {path_by_names(sg, {"v0-v1", "v1", "v1-v2", "v2"}),
                          path_by_names(sg, {"v0", "v0-v1"})});
  CHECK(is_retracted(c1, p3));
  CHECK(is_retracted(c2, p3));
  CHECK(is_minimal_in_symmetries(c1, group, p3) != is_minimal_in_symmetries(c2, group, p3));

  std::vector<Automorphism> trivial{Automorphism::identity(sg.graph.num_vertices(), sg.num_segments())};
  CHECK(is_minimal_in_symmetries(c1, trivial, p3));
  CHECK(is_minimal_in_symmetries(c2, trivial, p3));
}

TEST_CASE("symmetry minimality picks one cover per orbit on K4") {
  PathPool k4(two_subdivision(standard("complete", {4})));
  auto group = lifted_automorphisms(k4.graph());
  REQUIRE(group.size() == 24);
  auto covers = find_covers(k4, 4);
  std::set<Cover> all(covers.begin(), covers.end());
  std::set<Cover> seen;
  std::size_t orbits = 0;
  for (const auto& c : covers) {
    if (seen.count(c)) continue;
    std::set<Cover> orbit;
    for (const auto& a : group) {
      auto img = apply_symmetry(a, c, k4);
      CHECK(all.count(img));
      CHECK(covers_all_segments(img, k4));
      orbit.insert(img);
    }
    int minimal = 0;
    for (const auto& o : orbit) {
      seen.insert(o);
      if (is_minimal_in_symmetries(o, group, k4)) {
        ++minimal;
        CHECK(o == *orbit.begin());
      }
    }
    CHECK(minimal == 1);
    ++orbits;
  }
  CHECK(orbits < covers.size());

  auto perms = pool_permutations(group, k4);
  for (const auto& c : covers) {
    CHECK(is_minimal_in_symmetries(c, perms) == is_minimal_in_symmetries(c, group, k4));
  }
}

TEST_CASE("reroutings match a direct enumeration on the triangle") {
  PathPool tri(two_subdivision(triangle()));
  auto covers = find_covers(tri, 3);
  REQUIRE_FALSE(covers.empty());
  std::set<Cover> all(covers.begin(), covers.end());
  for (const auto& c : covers) {
    std::set<Cover> expect;
    for (int p : c) {
      const auto& path = tri.path(p);
      for (int q = 0; q < static_cast<int>(tri.size()); ++q) {
        const auto& alt = tri.path(q);
        if (q == p || std::count(c.begin(), c.end(), q)) continue;
        if (alt.front() != path.front() || alt.back() != path.back()) continue;
        Cover d = c;
        std::replace(d.begin(), d.end(), p, q);
        std::sort(d.begin(), d.end());
        std::vector<PathSeq> ps;
        for (int i : d) ps.push_back(tri.path(i));
        bool covered = true;
        for (std::size_t s = 0; s < tri.num_segments(); ++s) {
          bool hit = false;
          for (const auto& x : ps) hit = hit || std::count(x.edges.begin(), x.edges.end(), static_cast<EdgeId>(s));
          covered = covered && hit;
        }
        if (covered && is_retracted(ps)) expect.insert(d);
      }
    }
    auto got = reroutings(c, tri);
    CHECK(std::set<Cover>(got.begin(), got.end()) == expect);
    for (const auto& d : got) {
      CHECK(all.count(d));
      auto back = reroutings(d, tri);
      CHECK(std::binary_search(back.begin(), back.end(), c));
    }
  }

  PathPool p2(two_subdivision(standard("path", {1})));
  CHECK(reroutings(find_covers(p2, 1)[0], p2).empty());
}

TEST_CASE("rerouting minimality") {
  PathPool p2(two_subdivision(standard("path", {1})));
  CHECK(is_minimal_in_reroutings(find_covers(p2, 1)[0], p2));

  // Every rerouting class has exactly one minimal member.
  // K3,3 at size 4 has rerouting classes of 3, 4 and 5 covers.
  for (auto g : {triangle(), standard("complete", {4}), standard("complete_bipartite", {3, 3})}) {
    PathPool pool(two_subdivision(g));
    auto covers = find_covers(pool, 4);
    std::map<Cover, int> cls;
    int next = 0;
    for (const auto& c : covers) {
      if (cls.count(c)) continue;
      std::vector<Cover> queue{c};
      cls[c] = next;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& d : reroutings(queue[i], pool)) {
          if (cls.emplace(d, next).second) queue.push_back(d);
        }
      }
      ++next;
    }
    std::vector<int> minimal(static_cast<std::size_t>(next), 0), size(minimal);
    for (const auto& c : covers) {
      ++size[static_cast<std::size_t>(cls[c])];
      if (is_minimal_in_reroutings(c, pool)) ++minimal[static_cast<std::size_t>(cls[c])];
    }
    for (int m : minimal) CHECK(m == 1);
    if (g.num_vertices() == 6) CHECK(*std::max_element(size.begin(), size.end()) == 5);
  }
}
