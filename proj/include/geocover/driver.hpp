#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocover/cover.hpp"
#include "geocover/errors.hpp"
#include "geocover/graph.hpp"
#include "geocover/lp.hpp"

namespace geocover {

enum class Mode { weighted, unweighted };

std::string to_string(Mode m);

struct DriverOptions {
  Mode mode = Mode::weighted;
  /// Give up (BudgetExhausted) instead of trying covers larger than this.
  std::optional<int> max_size;
  std::uint64_t max_search_nodes = 500'000'000;
  std::uint64_t max_pivots = 1'000'000;
  std::size_t max_pool = 2'000'000;
  bool use_symmetry = true;
  bool use_rerouting = true;
  bool use_order_filter = true;
};

/// A cover of the whole 2-subdivision together with a weighting under which
/// every path is a shortest path.
struct Witness {
  std::vector<PathSeq> paths;
  Weighting weights;
};

struct SearchCounters {
  std::uint64_t search_nodes = 0;
  std::uint64_t candidates = 0;
  std::uint64_t feasibility_checks = 0;
  std::uint64_t pivots = 0;
};

struct CoverNumberReport {
  SubdividedGraph subdivided;
  Mode mode = Mode::weighted;
  int cover_number = 0;
  int lower = 0;
  int upper = 0;
  std::vector<Witness> witnesses;
  std::optional<int> distinct_count;
  SearchCounters counters;
  double seconds = 0;
};

/// Thrown when a budget runs out; [lower, upper] brackets the answer.
class BudgetExhausted : public LimitExceeded {
 public:
  BudgetExhausted(const std::string& what, int lower, int upper)
      : LimitExceeded(what), lower(lower), upper(upper) {}
  int lower;
  int upper;
};

/// max(ceil(max degree / 2), ceil(leaves / 2), 1), or 0 without edges.
int lower_bound(const Multigraph& g);
/// Edge count plus isolated loops.
int upper_bound(const Multigraph& g);

/// Smallest number of geodesics covering g. Components are solved
/// separately and summed.
CoverNumberReport cover_number(const Multigraph& g, const DriverOptions& opts = {});

/// Optimal covers of a connected graph, one per class of the equivalence
/// generated by graph symmetries and rerouting moves among feasible optimal
/// covers. The report carries one witness per class and distinct_count.
CoverNumberReport distinct_optimal_covers(const Multigraph& g, const DriverOptions& opts = {});

}  // namespace geocover
