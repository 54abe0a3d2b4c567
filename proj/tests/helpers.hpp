#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "geocover/graph.hpp"
#include "geocover/standard_graphs.hpp"

namespace testutil {

using namespace geocover;

inline Multigraph standard(std::string_view tag, std::initializer_list<int> params) {
  std::vector<int> p(params);
  return build_standard(tag, p);
}

inline Multigraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Path of sg through the named vertices; consecutive vertices must be
/// joined by exactly one segment.
inline PathSeq path_by_names(const SubdividedGraph& sg, std::initializer_list<std::string> names) {
  PathSeq p;
  for (const auto& n : names) p.vertices.push_back(*sg.graph.find_vertex(n));
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const VertexId a = p.vertices[i], b = p.vertices[i + 1];
    EdgeId found = -1;
    for (EdgeId e : sg.graph.incident(a)) {
      if (sg.graph.edge(e).other(a) == b) found = e;
    }
    p.edges.push_back(found);
  }
  return canonical(p);
}

}  // namespace testutil
