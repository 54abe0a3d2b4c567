#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "geocover/bits.hpp"
#include "geocover/graph.hpp"

namespace geocover {

/// Sorted, duplicate-free list of pool indices. Covers compare
/// lexicographically.
using Cover = std::vector<int>;

/// Candidate geodesics: every canonical simple path of a 2-subdivision, with
/// segment masks and an index by endpoint pair.
class PathPool {
 public:
  explicit PathPool(SubdividedGraph sg, std::size_t max_paths = 2'000'000);
  /// Uses the given paths, in the given order. Each must be a canonical simple
  /// path of sg.graph.
  PathPool(SubdividedGraph sg, std::vector<PathSeq> paths);

  const SubdividedGraph& graph() const { return *sg_; }
  std::size_t size() const { return paths_.size(); }
  std::size_t num_segments() const { return sg_->num_segments(); }
  const PathSeq& path(int i) const { return paths_[static_cast<std::size_t>(i)]; }
  std::span<const PathSeq> paths() const { return paths_; }

  const Bits& segments_of(int i) const { return masks_[static_cast<std::size_t>(i)]; }
  /// First and last segment of path i.
  std::array<EdgeId, 2> end_segments(int i) const { return ends_[static_cast<std::size_t>(i)]; }
  /// Pool paths containing segment s, as a bitset over pool indices.
  const Bits& through_segment(EdgeId s) const { return through_[static_cast<std::size_t>(s)]; }
  /// Pool indices of paths joining a and b (either order), ascending.
  std::span<const int> with_endpoints(VertexId a, VertexId b) const;
  /// Position of v along path i, or -1.
  int position(int i, VertexId v) const;

  std::optional<int> find(const PathSeq& p) const;

 private:
  void index();

  std::shared_ptr<const SubdividedGraph> sg_;
  std::vector<PathSeq> paths_;
  std::vector<Bits> masks_;
  std::vector<std::array<EdgeId, 2>> ends_;
  std::vector<Bits> through_;
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> by_endpoints_;
  std::map<PathSeq, int> lookup_;
};

bool covers_all_segments(const Cover& c, const PathPool& pool);

/// No path has an endpoint whose end segment lies on another path of c.
/// For a cover of all segments this is the same as asking that not every
/// segment at that endpoint is covered by the other paths.
bool is_retracted(const Cover& c, const PathPool& pool);
/// Same test on explicit paths; duplicates are allowed and count as distinct.
bool is_retracted(std::span<const PathSeq> paths);

/// Pairwise retraction test: neither path's end segment lies on the other.
/// Monotone under adding paths, so it prunes partial covers exactly.
bool retraction_compatible(const PathPool& pool, int a, int b);

/// Shared vertices of a and b occur in the same or exactly reversed order.
/// Necessary for both to be shortest paths under one positive weighting.
bool order_compatible(const PathPool& pool, int a, int b);

struct SearchOptions {
  int min_size = 1;
  int max_size = 1;
  std::uint64_t max_nodes = 200'000'000;
  /// Extra pairwise filter; paths a, b can share a cover only if it holds.
  std::function<bool(int, int)> pair_filter;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t reported = 0;
  bool stopped = false;
};

/// Streams every retracted cover of all segments with size in
/// [min_size, max_size] to `visit`, each exactly once. Returning false from
/// `visit` stops the search. Throws LimitExceeded once more than max_nodes
/// search nodes are expanded.
SearchStats for_each_cover(const PathPool& pool, const SearchOptions& opts,
                           const std::function<bool(const Cover&)>& visit);

/// All retracted covers of size at most max_size, sorted.
std::vector<Cover> find_covers(const PathPool& pool, int max_size,
                               std::uint64_t max_nodes = 200'000'000);

/// Lifted automorphism applied pathwise; result re-sorted.
Cover apply_symmetry(const Automorphism& lifted, const Cover& c, const PathPool& pool);

bool is_minimal_in_symmetries(const Cover& c, std::span<const Automorphism> lifted_group,
                              const PathPool& pool);

/// Covers obtained by swapping one path for another pool path with the same
/// endpoints, keeping full coverage and retraction. Sorted.
std::vector<Cover> reroutings(const Cover& c, const PathPool& pool);

/// Breadth-first search over rerouting moves; false as soon as a smaller
/// cover is reached. Throws LimitExceeded past max_visited covers.
bool is_minimal_in_reroutings(const Cover& c, const PathPool& pool,
                              std::size_t max_visited = 1'000'000);

/// Lifted group of sg.origin's automorphisms acting on sg.
std::vector<Automorphism> lifted_automorphisms(const SubdividedGraph& sg,
                                               AutomorphismLimits limits = {});

/// For each group element, the induced permutation of pool indices.
std::vector<std::vector<int>> pool_permutations(std::span<const Automorphism> lifted_group,
                                                const PathPool& pool);
Cover apply_pool_permutation(std::span<const int> perm, const Cover& c);
bool is_minimal_in_symmetries(const Cover& c, std::span<const std::vector<int>> perms);

}  // namespace geocover
