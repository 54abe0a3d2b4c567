#include "geocover/cover.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "geocover/errors.hpp"

namespace geocover {

PathPool::PathPool(SubdividedGraph sg, std::size_t max_paths)
    : sg_(std::make_shared<const SubdividedGraph>(std::move(sg))) {
  paths_ = enumerate_simple_paths(*sg_, max_paths);
  index();
}

PathPool::PathPool(SubdividedGraph sg, std::vector<PathSeq> paths)
    : sg_(std::make_shared<const SubdividedGraph>(std::move(sg))), paths_(std::move(paths)) {
  for (const auto& p : paths_) {
    if (!is_canonical_simple_path(sg_->graph, p)) {
      throw ContractError("pool entry is not a canonical simple path");
    }
  }
  index();
}

void PathPool::index() {
  const std::size_t n = paths_.size();
  const std::size_t segs = sg_->num_segments();
  masks_.assign(n, Bits(segs));
  ends_.resize(n);
  through_.assign(segs, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    const PathSeq& p = paths_[i];
    for (EdgeId s : p.edges) {
      masks_[i].set(static_cast<std::size_t>(s));
      through_[static_cast<std::size_t>(s)].set(i);
    }
    ends_[i] = {p.edges.front(), p.edges.back()};
    by_endpoints_[{p.front(), p.back()}].push_back(static_cast<int>(i));
    if (!lookup_.emplace(p, static_cast<int>(i)).second) {
      throw ContractError("duplicate path in pool");
    }
  }
}

std::span<const int> PathPool::with_endpoints(VertexId a, VertexId b) const {
  auto it = by_endpoints_.find(std::minmax(a, b));
  if (it == by_endpoints_.end()) return {};
  return it->second;
}

int PathPool::position(int i, VertexId v) const {
  const auto& vs = path(i).vertices;
  auto it = std::find(vs.begin(), vs.end(), v);
  return it == vs.end() ? -1 : static_cast<int>(it - vs.begin());
}

std::optional<int> PathPool::find(const PathSeq& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool covers_all_segments(const Cover& c, const PathPool& pool) {
  Bits covered(pool.num_segments());
  for (int i : c) covered |= pool.segments_of(i);
  return covered.all();
}

bool retraction_compatible(const PathPool& pool, int a, int b) {
  const auto ea = pool.end_segments(a);
  const auto eb = pool.end_segments(b);
  const Bits& ma = pool.segments_of(a);
  const Bits& mb = pool.segments_of(b);
  return !mb.test(static_cast<std::size_t>(ea[0])) && !mb.test(static_cast<std::size_t>(ea[1])) &&
         !ma.test(static_cast<std::size_t>(eb[0])) && !ma.test(static_cast<std::size_t>(eb[1]));
}

bool is_retracted(const Cover& c, const PathPool& pool) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] == c[j] || !retraction_compatible(pool, c[i], c[j])) return false;
    }
  }
  return true;
}

bool is_retracted(std::span<const PathSeq> paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (EdgeId end : {paths[i].edges.front(), paths[i].edges.back()}) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (j == i) continue;
        const auto& es = paths[j].edges;
        if (std::find(es.begin(), es.end(), end) != es.end()) return false;
      }
    }
  }
  return true;
}

bool order_compatible(const PathPool& pool, int a, int b) {
  const PathSeq& pb = pool.path(b);
  // Positions along a of the vertices of b that a also visits, in b's order;
  // they must be monotone.
  int prev = -1;
  int dir = 0;
  for (VertexId v : pb.vertices) {
    const int pos = pool.position(a, v);
    if (pos < 0) continue;
    if (prev >= 0) {
      const int d = pos > prev ? 1 : -1;
      if (dir == 0) {
        dir = d;
      } else if (d != dir) {
        return false;
      }
    }
    prev = pos;
  }
  return true;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const PathPool& pool, const SearchOptions& opts,
              const std::function<bool(const Cover&)>& visit)
      : pool_(pool), opts_(opts), visit_(visit), rows_(pool.size()) {}

  SearchStats run() {
    if (opts_.min_size < 0 || opts_.max_size < opts_.min_size) {
      throw ContractError("invalid cover size range");
    }
    if (pool_.num_segments() == 0 || opts_.max_size == 0) return stats_;
    Bits allowed(pool_.size());
    allowed.set_all();
    Bits covered(pool_.num_segments());
    recurse(allowed, covered);
    return stats_;
  }

 private:
  const Bits& row(int p) {
    auto& slot = rows_[static_cast<std::size_t>(p)];
    if (!slot.size()) {
      slot = Bits(pool_.size());
      for (std::size_t q = 0; q < pool_.size(); ++q) {
        const int qi = static_cast<int>(q);
        if (qi == p || !retraction_compatible(pool_, p, qi)) continue;
        if (opts_.pair_filter && !opts_.pair_filter(p, qi)) continue;
        slot.set(q);
      }
    }
    return slot;
  }

  void recurse(const Bits& allowed, const Bits& covered) {
    if (stats_.stopped) return;
    if (++stats_.nodes > opts_.max_nodes) {
      throw LimitExceeded("cover search exceeded " + std::to_string(opts_.max_nodes) + " nodes");
    }
    if (covered.all()) {
      if (static_cast<int>(members_.size()) >= opts_.min_size) {
        Cover c = members_;
        std::sort(c.begin(), c.end());
        ++stats_.reported;
        if (!visit_(c)) stats_.stopped = true;
      }
      return;
    }
    if (static_cast<int>(members_.size()) >= opts_.max_size) return;

    // Branch on the uncovered segment with the fewest live candidates.
    std::size_t best_seg = 0;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t s = 0; s < pool_.num_segments(); ++s) {
      if (covered.test(s)) continue;
      const std::size_t k = allowed.count_and(pool_.through_segment(static_cast<EdgeId>(s)));
      if (k < best_count) {
        best_count = k;
        best_seg = s;
        if (k == 0) return;
      }
    }

    Bits live = allowed;
    Bits cand = allowed;
    cand &= pool_.through_segment(static_cast<EdgeId>(best_seg));
    for (std::size_t p = cand.first(); p < cand.size(); p = cand.next(p + 1)) {
      const int pi = static_cast<int>(p);
      Bits next = live;
      next &= row(pi);
      Bits cov = covered;
      cov |= pool_.segments_of(pi);
      members_.push_back(pi);
      recurse(next, cov);
      members_.pop_back();
      if (stats_.stopped) return;
      live.reset(p);
    }
  }

  const PathPool& pool_;
  const SearchOptions& opts_;
  const std::function<bool(const Cover&)>& visit_;
  std::vector<Bits> rows_;
  Cover members_;
  SearchStats stats_;
};

}  // namespace

SearchStats for_each_cover(const PathPool& pool, const SearchOptions& opts,
                           const std::function<bool(const Cover&)>& visit) {
  return CoverSearch(pool, opts, visit).run();
}

std::vector<Cover> find_covers(const PathPool& pool, int max_size, std::uint64_t max_nodes) {
  if (max_size < 1) throw ContractError("max_size must be at least 1");
  SearchOptions opts;
  opts.min_size = 1;
  opts.max_size = max_size;
  opts.max_nodes = max_nodes;
  std::vector<Cover> out;
  for_each_cover(pool, opts, [&](const Cover& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Cover apply_symmetry(const Automorphism& lifted, const Cover& c, const PathPool& pool) {
  Cover out;
  out.reserve(c.size());
  for (int i : c) {
    const auto j = pool.find(apply_to_path(lifted, pool.path(i)));
    if (!j) throw ContractError("symmetry image is not a pool path");
    out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_in_symmetries(const Cover& c, std::span<const Automorphism> lifted_group,
                              const PathPool& pool) {
  for (const auto& a : lifted_group) {
    if (apply_symmetry(a, c, pool) < c) return false;
  }
  return true;
}

std::vector<Automorphism> lifted_automorphisms(const SubdividedGraph& sg,
                                               AutomorphismLimits limits) {
  std::vector<Automorphism> out;
  for (const auto& a : automorphisms(sg.origin, limits)) out.push_back(lift_automorphism(a, sg));
  return out;
}

std::vector<std::vector<int>> pool_permutations(std::span<const Automorphism> lifted_group,
                                                const PathPool& pool) {
  std::vector<std::vector<int>> perms;
  perms.reserve(lifted_group.size());
  for (const auto& a : lifted_group) {
    std::vector<int> perm(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto j = pool.find(apply_to_path(a, pool.path(static_cast<int>(i))));
      if (!j) throw ContractError("symmetry image is not a pool path");
      perm[i] = *j;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

Cover apply_pool_permutation(std::span<const int> perm, const Cover& c) {
  Cover out;
  out.reserve(c.size());
  for (int i : c) out.push_back(perm[static_cast<std::size_t>(i)]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_in_symmetries(const Cover& c, std::span<const std::vector<int>> perms) {
  Cover img(c.size());
  for (const auto& perm : perms) {
    for (std::size_t k = 0; k < c.size(); ++k) img[k] = perm[static_cast<std::size_t>(c[k])];
    std::sort(img.begin(), img.end());
    if (img < c) return false;
  }
  return true;
}

std::vector<Cover> reroutings(const Cover& c, const PathPool& pool) {
  std::vector<Cover> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const PathSeq& p = pool.path(c[k]);
    Bits rest(pool.num_segments());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != k) rest |= pool.segments_of(c[j]);
    }
    for (int q : pool.with_endpoints(p.front(), p.back())) {
      if (q == c[k] || std::binary_search(c.begin(), c.end(), q)) continue;
      Bits all = rest;
      all |= pool.segments_of(q);
      if (!all.all()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < c.size() && ok; ++j) {
        if (j != k) ok = retraction_compatible(pool, q, c[j]);
      }
      if (!ok) continue;
      Cover next = c;
      next[k] = q;
      std::sort(next.begin(), next.end());
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_minimal_in_reroutings(const Cover& c, const PathPool& pool, std::size_t max_visited) {
  std::set<Cover> visited{c};
  std::deque<Cover> queue{c};
  while (!queue.empty()) {
    Cover x = std::move(queue.front());
    queue.pop_front();
    for (auto& y : reroutings(x, pool)) {
      if (visited.count(y)) continue;
      if (y < c) return false;
      if (visited.size() >= max_visited) {
        throw LimitExceeded("rerouting search exceeded " + std::to_string(max_visited) +
                            " covers");
      }
      visited.insert(y);
      queue.push_back(std::move(y));
    }
  }
  return true;
}

}  // namespace geocover
