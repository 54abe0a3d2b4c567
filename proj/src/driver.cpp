#include "geocover/driver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

namespace geocover {

std::string to_string(Mode m) { return m == Mode::weighted ? "weighted" : "unweighted"; }

int lower_bound(const Multigraph& g) {
  if (g.num_edges() == 0) return 0;
  return std::max({(g.max_degree() + 1) / 2, (g.leaf_count() + 1) / 2, 1});
}

int upper_bound(const Multigraph& g) {
  return static_cast<int>(g.num_edges()) + g.isolated_loop_count();
}

namespace {

using Clock = std::chrono::steady_clock;

// A connected component with the maps back into the parent graph.
struct Component {
  Multigraph graph;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

std::vector<Component> split(const Multigraph& g) {
  std::vector<Component> out;
  for (const auto& vs : connected_components(g)) {
    Component c;
    std::vector<VertexId> index(g.num_vertices(), -1);
    for (VertexId v : vs) {
      index[static_cast<std::size_t>(v)] = c.graph.add_vertex(g.name(v));
      c.vertex_map.push_back(v);
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      if (index[static_cast<std::size_t>(ed.u)] < 0) continue;
      c.graph.add_edge(index[static_cast<std::size_t>(ed.u)], index[static_cast<std::size_t>(ed.v)]);
      c.edge_map.push_back(static_cast<EdgeId>(e));
    }
    if (c.graph.num_edges() > 0) out.push_back(std::move(c));
  }
  return out;
}

// Maps a path of the component's subdivision into the parent's subdivision.
PathSeq lift_path(const PathSeq& p, const Component& c, const SubdividedGraph& parent) {
  const auto nc = static_cast<VertexId>(c.graph.num_vertices());
  PathSeq q;
  for (VertexId v : p.vertices) {
    q.vertices.push_back(v < nc ? c.vertex_map[static_cast<std::size_t>(v)]
                                : parent.midpoint_of[static_cast<std::size_t>(
                                      c.edge_map[static_cast<std::size_t>(v - nc)])]);
  }
  for (EdgeId s : p.edges) {
    q.edges.push_back(2 * c.edge_map[static_cast<std::size_t>(s / 2)] + s % 2);
  }
  return canonical(q);
}

class Solver {
 public:
  Solver(const Multigraph& g, const DriverOptions& opts, SearchCounters& counters)
      : opts_(opts), counters_(counters), pool_(two_subdivision(g), opts.max_pool) {
    if (opts.use_symmetry && g.num_vertices() <= AutomorphismLimits{}.max_vertices) {
      const auto group = lifted_automorphisms(pool_.graph());
      perms_ = pool_permutations(group, pool_);
    }
    if (opts.use_order_filter) {
      filter_ = [this](int a, int b) { return order_compatible(pool_, a, b); };
    }
  }

  const PathPool& pool() const { return pool_; }

  // Witness weighting if c is realizable in the configured mode.
  std::optional<Weighting> realize(const Cover& c) {
    ++counters_.feasibility_checks;
    if (opts_.mode == Mode::unweighted) {
      Weighting unit = Weighting::uniform(pool_.num_segments(), 1);
      if (check_fixed_weights(c, unit, pool_)) return unit;
      return std::nullopt;
    }
    auto r = solve_feasibility(build_feasibility_program(c, pool_), LPLimits{opts_.max_pivots});
    counters_.pivots += r.pivots;
    if (!r.feasible) return std::nullopt;
    return std::move(r.witness);
  }

  bool symmetry_minimal(const Cover& c) const {
    return perms_.empty() || is_minimal_in_symmetries(c, perms_);
  }

  Cover canonical_form(const Cover& c) const {
    Cover best = c;
    for (const auto& perm : perms_) best = std::min(best, apply_pool_permutation(perm, c));
    return best;
  }

  // Streams symmetry-minimal covers of exactly size m.
  void each_candidate(int m, const std::function<bool(const Cover&)>& visit) {
    SearchOptions so;
    so.min_size = m;
    so.max_size = m;
    so.max_nodes = opts_.max_search_nodes - std::min(opts_.max_search_nodes, counters_.search_nodes);
    so.pair_filter = filter_;
    std::uint64_t local = 0;
    try {
      const auto stats = for_each_cover(pool_, so, [&](const Cover& c) {
        if (!symmetry_minimal(c)) return true;
        ++counters_.candidates;
        return visit(c);
      });
      local = stats.nodes;
    } catch (const LimitExceeded&) {
      counters_.search_nodes = opts_.max_search_nodes;
      throw;
    }
    counters_.search_nodes += local;
  }

 private:
  const DriverOptions& opts_;
  SearchCounters& counters_;
  PathPool pool_;
  std::vector<std::vector<int>> perms_;
  std::function<bool(int, int)> filter_;
};

struct ComponentResult {
  int number = 0;
  Cover cover;
  Weighting weights;
};

ComponentResult solve_component(Solver& solver, const Multigraph& g, const DriverOptions& opts,
                                int& proven_lower) {
  const int lo = lower_bound(g);
  const int hi = upper_bound(g);
  proven_lower = lo;
  for (int m = lo; m <= hi; ++m) {
    if (opts.max_size && m > *opts.max_size) {
      throw BudgetExhausted("cover size cap " + std::to_string(*opts.max_size) + " reached", m,
                            hi);
    }
    std::optional<ComponentResult> found;
    try {
      solver.each_candidate(m, [&](const Cover& c) {
        if (auto w = solver.realize(c)) {
          found = ComponentResult{m, c, std::move(*w)};
          return false;
        }
        return true;
      });
    } catch (const BudgetExhausted&) {
      throw;
    } catch (const LimitExceeded& e) {
      throw BudgetExhausted(e.what(), m, hi);
    }
    if (found) return *found;
    proven_lower = m + 1;
  }
  throw ContractError("no geodesic cover within the upper bound");
}

}  // namespace

CoverNumberReport cover_number(const Multigraph& g, const DriverOptions& opts) {
  const auto t0 = Clock::now();
  CoverNumberReport report;
  report.subdivided = two_subdivision(g);
  report.mode = opts.mode;
  report.lower = lower_bound(g);
  report.upper = upper_bound(g);

  Witness combined;
  combined.weights = Weighting::uniform(report.subdivided.num_segments(), 1);
  int total = 0;
  const auto comps = split(g);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& comp = comps[k];
    int proven = 0;
    try {
      Solver solver(comp.graph, opts, report.counters);
      const auto r = solve_component(solver, comp.graph, opts, proven);
      total += r.number;
      for (int i : r.cover) {
        combined.paths.push_back(lift_path(solver.pool().path(i), comp, report.subdivided));
      }
      for (std::size_t s = 0; s < r.weights.weight.size(); ++s) {
        const auto parent =
            static_cast<std::size_t>(2 * comp.edge_map[s / 2] + static_cast<EdgeId>(s % 2));
        combined.weights.weight[parent] = r.weights.weight[s];
      }
    } catch (const BudgetExhausted& e) {
      int lo = total + e.lower;
      int hi = total + e.upper;
      for (std::size_t j = k + 1; j < comps.size(); ++j) {
        lo += lower_bound(comps[j].graph);
        hi += upper_bound(comps[j].graph);
      }
      throw BudgetExhausted(e.what(), lo, hi);
    } catch (const LimitExceeded& e) {
      int lo = total + lower_bound(comp.graph);
      int hi = total + upper_bound(comp.graph);
      for (std::size_t j = k + 1; j < comps.size(); ++j) {
        lo += lower_bound(comps[j].graph);
        hi += upper_bound(comps[j].graph);
      }
      throw BudgetExhausted(e.what(), lo, hi);
    }
  }
  std::sort(combined.paths.begin(), combined.paths.end());
  report.cover_number = total;
  report.witnesses.push_back(std::move(combined));
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

CoverNumberReport distinct_optimal_covers(const Multigraph& g, const DriverOptions& opts) {
  const auto t0 = Clock::now();
  if (g.num_edges() == 0) throw ContractError("graph has no edges");
  if (connected_components(g).size() != 1) {
    throw ContractError("distinct cover census needs a connected graph");
  }
  CoverNumberReport report = cover_number(g, opts);
  report.witnesses.clear();
  const int m = report.cover_number;

  Solver solver(g, opts, report.counters);
  const PathPool& pool = solver.pool();
  std::map<Cover, Weighting> feasible;  // keyed by orbit-minimal cover
  try {
    solver.each_candidate(m, [&](const Cover& c) {
      if (auto w = solver.realize(c)) feasible.emplace(c, std::move(*w));
      return true;
    });
  } catch (const LimitExceeded& e) {
    throw BudgetExhausted(e.what(), m, m);
  }

  // Union-find over orbit representatives joined by single rerouting moves.
  std::map<Cover, Cover> parent;
  for (const auto& [c, w] : feasible) parent.emplace(c, c);
  auto find = [&](Cover c) {
    while (parent.at(c) != c) c = parent.at(c);
    return c;
  };
  if (opts.use_rerouting) {
    for (const auto& [c, w] : feasible) {
      for (const auto& y : reroutings(c, pool)) {
        const Cover k = solver.canonical_form(y);
        if (!feasible.count(k)) continue;
        Cover a = find(c), b = find(k);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::set<Cover> roots;
  for (const auto& [c, w] : feasible) roots.insert(find(c));

  for (const Cover& r : roots) {
    Witness wit;
    for (int i : r) wit.paths.push_back(pool.path(i));
    wit.weights = feasible.at(r);
    report.witnesses.push_back(std::move(wit));
  }
  report.distinct_count = static_cast<int>(roots.size());
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

}  // namespace geocover
