#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls the LP or the library's shortest-path code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "geocover/cover.hpp"
#include "geocover/graph.hpp"

namespace oracle {

using namespace geocover;

/// Exact all-pairs distances by Floyd-Warshall; nullopt when disconnected.
inline std::vector<std::vector<Distance>> all_pairs(const Multigraph& g, const Weighting& w) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Rational(0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(static_cast<EdgeId>(e));
    const auto u = static_cast<std::size_t>(ed.u), v = static_cast<std::size_t>(ed.v);
    if (u != v && (!d[u][v] || w.weight[e] < *d[u][v])) {
      d[u][v] = w.weight[e];
      d[v][u] = w.weight[e];
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) d[i][j] = *d[i][k] + *d[k][j];
  return d;
}

/// Every path has the exact distance between its ends as its length.
inline bool all_shortest(const Multigraph& g, const Weighting& w, const std::vector<PathSeq>& paths) {
  const auto d = all_pairs(g, w);
  for (const auto& p : paths) {
    Rational len = 0;
    for (EdgeId e : p.edges) len += w.weight[static_cast<std::size_t>(e)];
    const auto& best = d[static_cast<std::size_t>(p.front())][static_cast<std::size_t>(p.back())];
    if (!best || *best != len) return false;
  }
  return true;
}

/// For each cover: does some weighting with every segment length in
/// {1..max_weight} make all its paths shortest paths? Every weighting is
/// tried once; integer Floyd-Warshall distances.
inline std::vector<bool> integer_weight_search(const PathPool& pool, const std::vector<Cover>& covers,
                                               int max_weight) {
  const auto& g = pool.graph().graph;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  std::vector<bool> found(covers.size(), false);
  std::size_t open = covers.size();
  if (open == 0) return found;

  std::vector<int> used;  // pool indices on some cover
  for (const auto& c : covers) used.insert(used.end(), c.begin(), c.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<char> geo(pool.size(), 0);

  constexpr int inf = 1 << 28;
  std::vector<int> w(m, 1), d(n * n);
  while (true) {
    std::fill(d.begin(), d.end(), inf);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
    for (std::size_t e = 0; e < m; ++e) {
      const auto& ed = g.edge(static_cast<EdgeId>(e));
      const std::size_t u = static_cast<std::size_t>(ed.u), v = static_cast<std::size_t>(ed.v);
      d[u * n + v] = std::min(d[u * n + v], w[e]);
      d[v * n + u] = std::min(d[v * n + u], w[e]);
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    for (int p : used) {
      const auto& path = pool.path(p);
      int len = 0;
      for (EdgeId e : path.edges) len += w[static_cast<std::size_t>(e)];
      geo[static_cast<std::size_t>(p)] =
          len == d[static_cast<std::size_t>(path.front()) * n + static_cast<std::size_t>(path.back())];
    }
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (found[c]) continue;
      bool all = true;
      for (int p : covers[c]) all = all && geo[static_cast<std::size_t>(p)];
      if (all) {
        found[c] = true;
        --open;
      }
    }
    if (open == 0) break;
    std::size_t i = 0;
    while (i < m && w[i] == max_weight) w[i++] = 1;
    if (i == m) break;
    ++w[i];
  }
  return found;
}

/// Connected multigraphs (loops and parallel edges allowed, no isolated
/// vertices) with 1..max_vertices vertices and 1..max_edges edges, one per
/// isomorphism class.
inline std::vector<Multigraph> small_multigraphs(int max_vertices, int max_edges) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> kinds;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) kinds.emplace_back(u, v);
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!pick.empty()) {
        // Canonical form: lexicographically least relabelled edge list.
        std::vector<std::pair<int, int>> best;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<std::pair<int, int>> es;
          for (std::size_t k : pick) {
            int a = perm[static_cast<std::size_t>(kinds[k].first)], b = perm[static_cast<std::size_t>(kinds[k].second)];
            es.emplace_back(std::min(a, b), std::max(a, b));
          }
          std::sort(es.begin(), es.end());
          if (best.empty() || es < best) best = es;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) {
          Multigraph g;
          for (int v = 0; v < n; ++v) g.add_vertex(std::string(1, static_cast<char>('a' + v)));
          for (auto [u, v] : best) g.add_edge(u, v);
          bool ok = connected_components(g).size() == 1;
          for (int v = 0; v < n && ok; ++v) ok = g.degree(v) > 0 || n == 1;
          if (ok) out.push_back(g);
        }
      }
      if (static_cast<int>(pick.size()) == max_edges) return;
      for (std::size_t k = from; k < kinds.size(); ++k) {
        pick.push_back(k);
        rec(k);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace oracle
