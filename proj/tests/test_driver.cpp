#include <doctest.h>

#include "geocover/driver.hpp"
#include "geocover/lp.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace geocover;
using testutil::from_edges;
using testutil::standard;

namespace {

int number(const Multigraph& g, Mode mode = Mode::weighted) {
  DriverOptions o;
  o.mode = mode;
  auto r = cover_number(g, o);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(check_fixed_weights(r.witnesses[0].paths, r.witnesses[0].weights, r.subdivided));
  CHECK(r.lower <= r.cover_number);
  CHECK(r.cover_number <= r.upper);
  return r.cover_number;
}

}  // namespace

TEST_CASE("lower and upper bounds") {
  CHECK(lower_bound(standard("complete", {5})) == 2);
  CHECK(lower_bound(standard("star", {5})) == 3);
  CHECK(lower_bound(standard("caterpillar", {3})) == 2);
  CHECK(lower_bound(standard("bouquet", {1})) == 1);
  CHECK(lower_bound(from_edges(2, {})) == 0);

  CHECK(upper_bound(standard("complete", {4})) == 6);
  CHECK(upper_bound(standard("bouquet", {1})) == 2);
  CHECK(upper_bound(from_edges(3, {})) == 0);
  // A loop sharing its vertex with another edge is not isolated.
  CHECK(upper_bound(from_edges(2, {{0, 1}, {1, 1}})) == 2);
}

TEST_CASE("cover numbers of small standard graphs") {
  CHECK(number(standard("complete", {4})) == 4);
  CHECK(number(standard("complete_bipartite", {2, 3})) == 3);
  CHECK(number(standard("path", {1})) == 1);
  CHECK(number(standard("bouquet", {1})) == 2);
  CHECK(number(standard("cycle", {4})) == 2);
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(number(standard("caterpillar", {n})) == (n + 2) / 2);
  }
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(number(standard("sawtooth", {n})) == 2);
    CHECK(number(standard("sawtooth", {n}), Mode::unweighted) == n);
  }
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(number(standard("star", {n})) == (n + 1) / 2);
  }
}

TEST_CASE("components are solved separately") {
  // Triangle plus a disjoint edge plus an isolated vertex.
  auto g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  CHECK(number(g) == 3);
  CHECK(number(from_edges(2, {})) == 0);
}

TEST_CASE("weighted never exceeds unweighted") {
  for (const auto& g : oracle::small_multigraphs(3, 4)) {
    CHECK(number(g) <= number(g, Mode::unweighted));
  }
}

TEST_CASE("dedup filters do not change the cover number") {
  for (auto g : {standard("complete", {4}), standard("complete_bipartite", {2, 3}), standard("sawtooth", {2})}) {
    DriverOptions plain;
    plain.use_symmetry = false;
    plain.use_rerouting = false;
    plain.use_order_filter = false;
    CHECK(cover_number(g, plain).cover_number == cover_number(g).cover_number);
  }
}

TEST_CASE("budgets") {
  DriverOptions o;
  o.max_size = 3;
  try {
    cover_number(standard("complete", {4}), o);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.lower == 4);
    CHECK(e.upper == 6);
  }
  DriverOptions tiny;
  tiny.max_search_nodes = 1;
  CHECK_THROWS_AS(cover_number(standard("complete", {4}), tiny), BudgetExhausted);
}

TEST_CASE("distinct optimal covers") {
  auto p2 = distinct_optimal_covers(standard("path", {1}));
  CHECK(p2.distinct_count == 1);
  CHECK(p2.witnesses.size() == 1);

  auto k4 = distinct_optimal_covers(standard("complete", {4}));
  CHECK(k4.cover_number == 4);
  REQUIRE(k4.distinct_count);
  CHECK(k4.witnesses.size() == static_cast<std::size_t>(*k4.distinct_count));
  for (const auto& w : k4.witnesses) CHECK(check_fixed_weights(w.paths, w.weights, k4.subdivided));

  CHECK_THROWS_AS(distinct_optimal_covers(from_edges(4, {{0, 1}, {2, 3}})), ContractError);
}
