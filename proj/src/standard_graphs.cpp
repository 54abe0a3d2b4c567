#include "geocover/standard_graphs.hpp"

#include "geocover/errors.hpp"

namespace geocover {

namespace {

std::string letter_name(int i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return s;
}

void expect_arity(std::string_view tag, std::span<const int> params, std::size_t n) {
  if (params.size() != n) {
    throw ContractError(std::string(tag) + " takes " + std::to_string(n) + " parameter(s), got " +
                        std::to_string(params.size()));
  }
}

void expect_at_least(std::string_view tag, int value, int min) {
  if (value < min) {
    throw ContractError(std::string(tag) + ": parameter " + std::to_string(value) +
                        " must be >= " + std::to_string(min));
  }
}

}  // namespace

Multigraph build_standard(std::string_view tag, std::span<const int> params) {
  Multigraph g;
  if (tag == "complete") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 1);
    const int n = params[0];
    for (int i = 0; i < n; ++i) g.add_vertex(letter_name(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  } else if (tag == "complete_bipartite") {
    expect_arity(tag, params, 2);
    expect_at_least(tag, params[0], 1);
    expect_at_least(tag, params[1], 1);
    const int p = params[0], q = params[1];
    for (int i = 0; i < p + q; ++i) g.add_vertex(letter_name(i));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  } else if (tag == "path") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 0);
    const int n = params[0];
    for (int i = 0; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
  } else if (tag == "cycle") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 1);
    const int n = params[0];
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  } else if (tag == "star") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 1);
    const int n = params[0];
    g.add_vertex("c");
    for (int i = 1; i <= n; ++i) g.add_edge(0, g.add_vertex("l" + std::to_string(i)));
  } else if (tag == "caterpillar") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 0);
    const int n = params[0];
    for (int i = 0; i <= n; ++i) g.add_vertex("s" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i <= n; ++i) g.add_edge(i, g.add_vertex("l" + std::to_string(i)));
  } else if (tag == "sawtooth") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 1);
    const int n = params[0];
    for (int i = 0; i <= n; ++i) g.add_vertex("b" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
      const VertexId p = g.add_vertex("p" + std::to_string(i));
      g.add_edge(i - 1, i);
      g.add_edge(i - 1, p);
      g.add_edge(p, i);
    }
  } else if (tag == "bouquet") {
    expect_arity(tag, params, 1);
    expect_at_least(tag, params[0], 1);
    g.add_vertex("v");
    for (int i = 0; i < params[0]; ++i) g.add_edge(0, 0);
  } else {
    throw ContractError("unknown standard graph: " + std::string(tag));
  }
  return g;
}

std::vector<std::string> standard_graph_tags() {
  return {"complete", "complete_bipartite", "path",     "cycle",
          "star",     "caterpillar",        "sawtooth", "bouquet"};
}

}  // namespace geocover
