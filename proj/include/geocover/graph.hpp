#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geocover/rational.hpp"

namespace geocover {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph. Loops and parallel edges are allowed; edge
/// ids are dense and assigned in insertion order.
class Multigraph {
 public:
  Multigraph() = default;

  VertexId add_vertex(std::string name = {});
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  const std::string& name(VertexId v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  /// Incident edge ids; a loop is listed twice.
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  /// Loops count twice.
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;
  int leaf_count() const;
  /// Loops whose vertex carries no other edge.
  int isolated_loop_count() const;
  /// Number of edges joining u and v (loops at u when u == v).
  int multiplicity(VertexId u, VertexId v) const;

  bool is_vertex(VertexId v) const {
    return v >= 0 && static_cast<std::size_t>(v) < names_.size();
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);

/// Induced subgraph on `vertices` (renumbered in the given order, names kept).
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices);

/// Graph obtained by inserting a midpoint in every edge. Original vertices
/// keep their ids; the midpoint of edge e is vertex |V| + e. Segment 2e joins
/// edge(e).u to the midpoint, segment 2e+1 joins the midpoint to edge(e).v.
struct SubdividedGraph {
  Multigraph graph;
  Multigraph origin;
  std::vector<VertexId> midpoint_of;
  std::vector<std::array<EdgeId, 2>> segment_pair_of;

  bool is_original(VertexId v) const {
    return static_cast<std::size_t>(v) < origin.num_vertices();
  }
  std::size_t num_segments() const { return graph.num_edges(); }
  EdgeId origin_edge_of_segment(EdgeId s) const { return s / 2; }
  /// "<midpoint name>:<0|1>", 0 being the half at the origin edge's first endpoint.
  std::string segment_name(EdgeId s) const;
  std::optional<EdgeId> find_segment(std::string_view name) const;
};

SubdividedGraph two_subdivision(const Multigraph& g);

/// A simple path given as alternating vertices and edge ids.
struct PathSeq {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  std::size_t num_edges() const { return edges.size(); }

  friend auto operator<=>(const PathSeq&, const PathSeq&) = default;
  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

PathSeq reversed(const PathSeq& p);
/// Orients p so that front() < back().
PathSeq canonical(const PathSeq& p);
/// Simple, at least one edge, consecutive edges join consecutive vertices,
/// distinct endpoints, canonical orientation.
bool is_canonical_simple_path(const Multigraph& g, const PathSeq& p);

/// Every canonical simple path with at least one edge, sorted. Throws
/// LimitExceeded once more than `max_paths` paths have been produced.
std::vector<PathSeq> enumerate_simple_paths(const SubdividedGraph& sg,
                                            std::size_t max_paths = 2'000'000);
std::vector<PathSeq> enumerate_simple_paths(const Multigraph& g,
                                            std::size_t max_paths = 2'000'000);

/// Positive rational length per segment (edge) id.
struct Weighting {
  std::vector<Rational> weight;

  static Weighting uniform(std::size_t n, const Rational& value = 1);
  bool all_positive() const;
  friend bool operator==(const Weighting&, const Weighting&) = default;
};

Rational path_length(const PathSeq& p, const Weighting& w);

/// Exact single-pair distance in a weighted multigraph; nullopt if disconnected.
Distance shortest_path_length(const Multigraph& g, const Weighting& w, VertexId u,
                              VertexId v);
Distance shortest_path_length(const SubdividedGraph& sg, const Weighting& w,
                              VertexId u, VertexId v);
/// Distances from `source` to every vertex.
std::vector<Distance> shortest_path_lengths_from(const Multigraph& g, const Weighting& w,
                                                 VertexId source);

/// Vertex bijection plus compatible edge bijection.
struct Automorphism {
  std::vector<VertexId> vertex_perm;
  std::vector<EdgeId> edge_perm;

  static Automorphism identity(std::size_t num_vertices, std::size_t num_edges);
  Automorphism then(const Automorphism& next) const;  // next ∘ this
  Automorphism inverse() const;
  bool is_identity() const;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

bool is_automorphism(const Multigraph& g, const Automorphism& a);

struct AutomorphismLimits {
  std::size_t max_vertices = 16;
  std::size_t max_group_order = 2'000'000;
};

/// Full automorphism group (vertex permutations times all parallel-edge
/// bijections), in lexicographic order of (vertex_perm, edge_perm).
std::vector<Automorphism> automorphisms(const Multigraph& g, AutomorphismLimits limits = {});

/// Action of an automorphism of sg.origin on the 2-subdivision. Loop halves
/// keep their index.
Automorphism lift_automorphism(const Automorphism& a, const SubdividedGraph& sg);

/// Applies a vertex/edge bijection to a path and re-canonicalizes.
PathSeq apply_to_path(const Automorphism& a, const PathSeq& p);

}  // namespace geocover
