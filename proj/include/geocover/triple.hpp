#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geocover/graph.hpp"
#include "geocover/lp.hpp"

namespace geocover {

/// Abstract paths given by their labeled points in order. A label shared by
/// two paths is a common point; arcs between consecutive points are private.
struct PathSystem {
  std::vector<std::vector<std::string>> paths;
  /// Per path: traverse the point list backwards.
  std::vector<bool> reversed;

  /// Points of path i in its current orientation.
  std::vector<std::string> oriented(std::size_t i) const;
};

/// Gluing of the abstract paths: each path gets fresh end vertices, and
/// consecutive points are joined by an edge of their own.
struct RealizedSystem {
  Multigraph graph;
  std::vector<PathSeq> paths;  // in graph, as listed (not re-canonicalized)
  SubdividedGraph subdivided;
  std::vector<PathSeq> subdivided_paths;  // canonical paths of the subdivision
};

/// Path in g mapped onto the subdivision, re-canonicalized.
PathSeq subdivide_path(const PathSeq& p, const SubdividedGraph& sg);

RealizedSystem realize(const PathSystem& sys);

/// Orientation flags making paths 0 and 1 agree on every shared point, with
/// path 0 kept forward; nullopt if none exists.
std::optional<std::pair<bool, bool>> compatible_orientation_two(const PathSystem& sys);

struct MetricTwo {
  RealizedSystem realized;
  Weighting weights;  // on realized.subdivided segments
};

/// Weighting under which both paths of a compatibly oriented two-path system
/// are shortest paths. Shared points sit at consecutive integer positions; the
/// stretch of each path between neighbouring shared points has length 1.
MetricTwo construct_metric_two(const PathSystem& sys, std::pair<bool, bool> orientation);

enum class TripleVerdict { partial_order, exceptional_2a, exceptional_2b, not_geodesible };
std::string to_string(TripleVerdict v);

TripleVerdict classify_three(const PathSystem& sys);

/// Admissible when some positive weighting makes every path of the realized
/// system a shortest path.
FeasibilityResult check_admissible(const PathSystem& sys, LPLimits limits = {});

/// Points along one path; weak[i] marks "labels[i] ⪯ labels[i+1]".
struct PointOrder {
  std::vector<std::string> labels;
  std::vector<bool> weak;
};

struct TripleConfig {
  int group = 1;
  std::string name;
  std::array<PointOrder, 3> orders;
  /// Identified label pairs; each must join the two sides of a weak link.
  std::vector<std::pair<std::string, std::string>> identifications;

  std::string variant_name() const;  // "distinct" or e.g. "e=f"
};

/// Parses "a<b<=e | b<c | c<a" style text.
TripleConfig parse_config(int group, std::string name, const std::string& text);
std::string format_order(const PointOrder& o, const std::vector<std::pair<std::string, std::string>>& ids);

/// Path system for the configuration, identified labels merged. Throws
/// ContractError if the identifications contradict an order.
PathSystem config_to_system(const TripleConfig& cfg);
RealizedSystem config_to_graph(const TripleConfig& cfg);
FeasibilityResult check_admissible(const TripleConfig& cfg, LPLimits limits = {});

/// The 21 (group 1) or 108 (group 2) base configurations, all points distinct.
std::vector<TripleConfig> base_configs(int group);
/// Consistent ways to turn weak links into equalities, never two adjacent
/// equalities on one path. The all-distinct variant is not included.
std::vector<TripleConfig> degenerate_variants(const TripleConfig& cfg);

struct AtlasRow {
  TripleConfig config;
  bool admissible = false;
  std::optional<Weighting> witness;
  TripleVerdict verdict = TripleVerdict::not_geodesible;
};

/// Every base configuration followed by its degenerate variants, each
/// checked by the LP and classified structurally.
std::vector<AtlasRow> enumerate_group(int group, bool with_variants = true,
                                      LPLimits limits = {});

/// Expected admissible rows as (base name, variant name).
std::vector<std::pair<std::string, std::string>> expected_admissible(int group);

/// Rows where the computed flag disagrees with the expected sets, as
/// readable messages. Group 1 checks every row except 7 with e=f, which the
/// reference list leaves open; group 2 checks the distinct-point rows.
std::vector<std::string> diff_expected(int group, const std::vector<AtlasRow>& rows);

}  // namespace geocover
