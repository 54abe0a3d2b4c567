#include "geocover/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "geocover/errors.hpp"

namespace geocover {

VertexId Multigraph::add_vertex(std::string name) {
  const auto id = static_cast<VertexId>(names_.size());
  if (name.empty()) name = "v" + std::to_string(id);
  names_.push_back(std::move(name));
  incidence_.emplace_back();
  return id;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  if (!is_vertex(u) || !is_vertex(v)) {
    throw ContractError("edge endpoint is not a vertex: (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  incidence_[static_cast<std::size_t>(u)].push_back(id);
  incidence_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    best = std::max(best, degree(static_cast<VertexId>(v)));
  }
  return best;
}

int Multigraph::leaf_count() const {
  int n = 0;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (degree(static_cast<VertexId>(v)) == 1) ++n;
  }
  return n;
}

int Multigraph::isolated_loop_count() const {
  int k = 0;
  for (const Edge& e : edges_) {
    if (e.is_loop() && degree(e.u) == 2) ++k;
  }
  return k;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  int n = 0;
  for (EdgeId e : incident(u)) {
    const Edge& ed = edge(e);
    if (u == v) {
      if (ed.is_loop()) ++n;
    } else if (ed.other(u) == v) {
      ++n;
    }
  }
  return u == v ? n / 2 : n;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{static_cast<VertexId>(s)};
    comp[s] = id;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices) {
  Multigraph h;
  std::vector<VertexId> index(g.num_vertices(), -1);
  for (VertexId v : vertices) {
    index[static_cast<std::size_t>(v)] = h.add_vertex(g.name(v));
  }
  for (const Edge& e : g.edges()) {
    const VertexId a = index[static_cast<std::size_t>(e.u)];
    const VertexId b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) h.add_edge(a, b);
  }
  return h;
}

// ---------------------------------------------------------------------------
// 2-subdivision

namespace {

std::vector<std::string> midpoint_names(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, int> seen;
  std::vector<std::string> names;
  names.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    const int ordinal = ++seen[key];
    std::string name = g.name(e.u) + "-" + g.name(e.v);
    if (g.multiplicity(e.u, e.v) > 1) name += "#" + std::to_string(ordinal);
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

SubdividedGraph two_subdivision(const Multigraph& g) {
  SubdividedGraph sg;
  sg.origin = g;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    sg.graph.add_vertex(g.name(static_cast<VertexId>(v)));
  }
  const auto names = midpoint_names(g);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (sg.graph.find_vertex(names[e])) {
      throw ContractError("midpoint name collides with a vertex name: " + names[e]);
    }
    sg.midpoint_of.push_back(sg.graph.add_vertex(names[e]));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(static_cast<EdgeId>(e));
    const VertexId m = sg.midpoint_of[e];
    const EdgeId s0 = sg.graph.add_edge(ed.u, m);
    const EdgeId s1 = sg.graph.add_edge(m, ed.v);
    sg.segment_pair_of.push_back({s0, s1});
  }
  return sg;
}

std::string SubdividedGraph::segment_name(EdgeId s) const {
  const auto e = static_cast<std::size_t>(origin_edge_of_segment(s));
  return graph.name(midpoint_of[e]) + ":" + std::to_string(s % 2);
}

std::optional<EdgeId> SubdividedGraph::find_segment(std::string_view name) const {
  const auto colon = name.rfind(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto side = name.substr(colon + 1);
  if (side != "0" && side != "1") return std::nullopt;
  const auto mid = graph.find_vertex(name.substr(0, colon));
  if (!mid || is_original(*mid)) return std::nullopt;
  const auto e = static_cast<std::size_t>(*mid) - origin.num_vertices();
  return segment_pair_of[e][side == "0" ? 0 : 1];
}

// ---------------------------------------------------------------------------
// Paths

PathSeq reversed(const PathSeq& p) {
  PathSeq r{{p.vertices.rbegin(), p.vertices.rend()}, {p.edges.rbegin(), p.edges.rend()}};
  return r;
}

PathSeq canonical(const PathSeq& p) {
  return p.front() <= p.back() ? p : reversed(p);
}

bool is_canonical_simple_path(const Multigraph& g, const PathSeq& p) {
  if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return false;
  if (!(p.front() < p.back())) return false;
  std::vector<char> seen(g.num_vertices(), 0);
  for (VertexId v : p.vertices) {
    if (!g.is_vertex(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    const VertexId a = p.vertices[i];
    const VertexId b = p.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

std::vector<PathSeq> enumerate_simple_paths(const Multigraph& g, std::size_t max_paths) {
  std::vector<PathSeq> out;
  std::vector<char> on_path(g.num_vertices(), 0);
  PathSeq cur;

  std::function<void()> extend = [&]() {
    const VertexId tail = cur.back();
    for (EdgeId e : g.incident(tail)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const VertexId next = ed.other(tail);
      if (on_path[static_cast<std::size_t>(next)]) continue;
      cur.vertices.push_back(next);
      cur.edges.push_back(e);
      on_path[static_cast<std::size_t>(next)] = 1;
      if (cur.front() < next) {
        if (out.size() >= max_paths) {
          throw LimitExceeded("simple-path pool exceeds cap of " + std::to_string(max_paths));
        }
        out.push_back(cur);
      }
      extend();
      on_path[static_cast<std::size_t>(next)] = 0;
      cur.vertices.pop_back();
      cur.edges.pop_back();
    }
  };

  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    cur.vertices.assign(1, static_cast<VertexId>(s));
    cur.edges.clear();
    on_path[s] = 1;
    extend();
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathSeq> enumerate_simple_paths(const SubdividedGraph& sg, std::size_t max_paths) {
  return enumerate_simple_paths(sg.graph, max_paths);
}

// ---------------------------------------------------------------------------
// Weights and distances

Weighting Weighting::uniform(std::size_t n, const Rational& value) {
  return Weighting{std::vector<Rational>(n, value)};
}

bool Weighting::all_positive() const {
  return std::all_of(weight.begin(), weight.end(), [](const Rational& r) { return sgn(r) > 0; });
}

Rational path_length(const PathSeq& p, const Weighting& w) {
  Rational total = 0;
  for (EdgeId e : p.edges) total += w.weight[static_cast<std::size_t>(e)];
  return total;
}

std::vector<Distance> shortest_path_lengths_from(const Multigraph& g, const Weighting& w,
                                                 VertexId source) {
  if (w.weight.size() != g.num_edges()) {
    throw ContractError("weighting size does not match edge count");
  }
  const std::size_t n = g.num_vertices();
  std::vector<Distance> dist(n);
  std::vector<char> done(n, 0);
  using Item = std::pair<Rational, VertexId>;
  auto cmp = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  dist[static_cast<std::size_t>(source)] = Rational(0);
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(x)]) continue;
    done[static_cast<std::size_t>(x)] = 1;
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      Rational nd = d + w.weight[static_cast<std::size_t>(e)];
      auto& dy = dist[static_cast<std::size_t>(y)];
      if (!dy || nd < *dy) {
        dy = nd;
        queue.emplace(std::move(nd), y);
      }
    }
  }
  return dist;
}

Distance shortest_path_length(const Multigraph& g, const Weighting& w, VertexId u, VertexId v) {
  if (u == v) return Rational(0);
  return shortest_path_lengths_from(g, w, u)[static_cast<std::size_t>(v)];
}

Distance shortest_path_length(const SubdividedGraph& sg, const Weighting& w, VertexId u,
                              VertexId v) {
  return shortest_path_length(sg.graph, w, u, v);
}

// ---------------------------------------------------------------------------
// Automorphisms

Automorphism Automorphism::identity(std::size_t num_vertices, std::size_t num_edges) {
  Automorphism a;
  a.vertex_perm.resize(num_vertices);
  a.edge_perm.resize(num_edges);
  std::iota(a.vertex_perm.begin(), a.vertex_perm.end(), 0);
  std::iota(a.edge_perm.begin(), a.edge_perm.end(), 0);
  return a;
}

Automorphism Automorphism::then(const Automorphism& next) const {
  Automorphism r;
  r.vertex_perm.resize(vertex_perm.size());
  r.edge_perm.resize(edge_perm.size());
  for (std::size_t i = 0; i < vertex_perm.size(); ++i) {
    r.vertex_perm[i] = next.vertex_perm[static_cast<std::size_t>(vertex_perm[i])];
  }
  for (std::size_t i = 0; i < edge_perm.size(); ++i) {
    r.edge_perm[i] = next.edge_perm[static_cast<std::size_t>(edge_perm[i])];
  }
  return r;
}

Automorphism Automorphism::inverse() const {
  Automorphism r;
  r.vertex_perm.resize(vertex_perm.size());
  r.edge_perm.resize(edge_perm.size());
  for (std::size_t i = 0; i < vertex_perm.size(); ++i) {
    r.vertex_perm[static_cast<std::size_t>(vertex_perm[i])] = static_cast<VertexId>(i);
  }
  for (std::size_t i = 0; i < edge_perm.size(); ++i) {
    r.edge_perm[static_cast<std::size_t>(edge_perm[i])] = static_cast<EdgeId>(i);
  }
  return r;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < vertex_perm.size(); ++i) {
    if (vertex_perm[i] != static_cast<VertexId>(i)) return false;
  }
  for (std::size_t i = 0; i < edge_perm.size(); ++i) {
    if (edge_perm[i] != static_cast<EdgeId>(i)) return false;
  }
  return true;
}

bool is_automorphism(const Multigraph& g, const Automorphism& a) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (a.vertex_perm.size() != n || a.edge_perm.size() != m) return false;
  std::vector<char> hit(n, 0);
  for (VertexId x : a.vertex_perm) {
    if (!g.is_vertex(x) || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<char> ehit(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeId f = a.edge_perm[e];
    if (f < 0 || static_cast<std::size_t>(f) >= m || ehit[static_cast<std::size_t>(f)]) {
      return false;
    }
    ehit[static_cast<std::size_t>(f)] = 1;
    const Edge& src = g.edge(static_cast<EdgeId>(e));
    const Edge& dst = g.edge(f);
    const VertexId pu = a.vertex_perm[static_cast<std::size_t>(src.u)];
    const VertexId pv = a.vertex_perm[static_cast<std::size_t>(src.v)];
    if (!((dst.u == pu && dst.v == pv) || (dst.u == pv && dst.v == pu))) return false;
  }
  return true;
}

namespace {

// Edges between each unordered vertex pair, in id order.
std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> edge_classes(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(static_cast<EdgeId>(e));
    classes[std::minmax(ed.u, ed.v)].push_back(static_cast<EdgeId>(e));
  }
  return classes;
}

}  // namespace

std::vector<Automorphism> automorphisms(const Multigraph& g, AutomorphismLimits limits) {
  const std::size_t n = g.num_vertices();
  if (n > limits.max_vertices) {
    throw LimitExceeded("automorphism search limited to " + std::to_string(limits.max_vertices) +
                        " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    if (!e.is_loop()) ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
  }

  std::vector<std::vector<VertexId>> vertex_perms;
  std::vector<VertexId> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      vertex_perms.push_back(image);
      return;
    }
    const auto vi = static_cast<VertexId>(i);
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || g.degree(static_cast<VertexId>(c)) != g.degree(vi)) continue;
      if (mult[c][c] != mult[i][i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = mult[i][j] == mult[c][static_cast<std::size_t>(image[j])];
      }
      if (!ok) continue;
      image[i] = static_cast<VertexId>(c);
      used[c] = 1;
      assign(i + 1);
      used[c] = 0;
      image[i] = -1;
    }
  };
  assign(0);

  const auto classes = edge_classes(g);
  std::vector<Automorphism> group;
  for (const auto& vp : vertex_perms) {
    // For each edge class, its image class and the list of bijections.
    std::vector<std::pair<const std::vector<EdgeId>*, const std::vector<EdgeId>*>> pairs;
    for (const auto& [key, src] : classes) {
      const auto img = std::minmax(vp[static_cast<std::size_t>(key.first)],
                                   vp[static_cast<std::size_t>(key.second)]);
      pairs.emplace_back(&src, &classes.at(img));
    }
    std::vector<std::vector<std::size_t>> perm_state;
    for (const auto& pr : pairs) {
      std::vector<std::size_t> p(pr.first->size());
      std::iota(p.begin(), p.end(), 0);
      perm_state.push_back(std::move(p));
    }
    std::vector<Automorphism> block;
    while (true) {
      Automorphism a;
      a.vertex_perm = vp;
      a.edge_perm.assign(g.num_edges(), -1);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& src = *pairs[k].first;
        const auto& dst = *pairs[k].second;
        for (std::size_t t = 0; t < src.size(); ++t) {
          a.edge_perm[static_cast<std::size_t>(src[t])] = dst[perm_state[k][t]];
        }
      }
      block.push_back(std::move(a));
      if (group.size() + block.size() > limits.max_group_order) {
        throw LimitExceeded("automorphism group exceeds " +
                            std::to_string(limits.max_group_order) + " elements");
      }
      // Odometer over the per-class permutations, last class fastest.
      std::size_t k = perm_state.size();
      while (k > 0 && !std::next_permutation(perm_state[k - 1].begin(), perm_state[k - 1].end())) {
        --k;
      }
      if (k == 0) break;
    }
    std::sort(block.begin(), block.end());
    for (auto& a : block) group.push_back(std::move(a));
  }
  return group;
}

Automorphism lift_automorphism(const Automorphism& a, const SubdividedGraph& sg) {
  const std::size_t n = sg.origin.num_vertices();
  const std::size_t m = sg.origin.num_edges();
  Automorphism lifted;
  lifted.vertex_perm.resize(n + m);
  lifted.edge_perm.resize(2 * m);
  for (std::size_t v = 0; v < n; ++v) lifted.vertex_perm[v] = a.vertex_perm[v];
  for (std::size_t e = 0; e < m; ++e) {
    const auto f = static_cast<std::size_t>(a.edge_perm[e]);
    lifted.vertex_perm[static_cast<std::size_t>(sg.midpoint_of[e])] = sg.midpoint_of[f];
    const Edge& src = sg.origin.edge(static_cast<EdgeId>(e));
    const Edge& dst = sg.origin.edge(static_cast<EdgeId>(f));
    const bool flip = !src.is_loop() && a.vertex_perm[static_cast<std::size_t>(src.u)] != dst.u;
    for (std::size_t h = 0; h < 2; ++h) {
      lifted.edge_perm[static_cast<std::size_t>(sg.segment_pair_of[e][h])] =
          sg.segment_pair_of[f][flip ? 1 - h : h];
    }
  }
  return lifted;
}

PathSeq apply_to_path(const Automorphism& a, const PathSeq& p) {
  PathSeq q;
  q.vertices.reserve(p.vertices.size());
  q.edges.reserve(p.edges.size());
  for (VertexId v : p.vertices) q.vertices.push_back(a.vertex_perm[static_cast<std::size_t>(v)]);
  for (EdgeId e : p.edges) q.edges.push_back(a.edge_perm[static_cast<std::size_t>(e)]);
  return canonical(q);
}

}  // namespace geocover
