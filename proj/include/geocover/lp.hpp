#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geocover/cover.hpp"
#include "geocover/graph.hpp"
#include "geocover/rational.hpp"

namespace geocover {

/// Homogeneous row: sum(coeff * w[var]) <= 0.
struct LPConstraint {
  std::vector<std::pair<int, int>> terms;  // (variable, coefficient), variable ascending
  friend bool operator==(const LPConstraint&, const LPConstraint&) = default;
};

/// Variables w[0..num_vars) with w >= 1, constraint rows <= 0, and the
/// nominal objective "minimize the sum of all w". Only feasibility is decided.
struct LPProgram {
  int num_vars = 0;
  std::vector<LPConstraint> constraints;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<Weighting> witness;
  std::uint64_t pivots = 0;
};

struct LPLimits {
  std::uint64_t max_pivots = 1'000'000;
};

/// One row per (cover path g, other pool path p with g's endpoints):
/// segments(g) - segments(p) <= 0.
LPProgram build_feasibility_program(const Cover& c, const PathPool& pool);

/// Exact decision by simplex on the Farkas alternative with Bland's rule. A
/// feasible verdict always carries a witness that satisfies every row and
/// bound exactly. Throws LimitExceeded past max_pivots.
FeasibilityResult solve_feasibility(const LPProgram& p, LPLimits limits = {});

/// Rows and bounds evaluated exactly at w.
bool satisfies(const LPProgram& p, const Weighting& w);

/// Every path is a shortest path between its endpoints under w.
bool check_fixed_weights(std::span<const PathSeq> paths, const Weighting& w,
                         const SubdividedGraph& sg);
bool check_fixed_weights(const Cover& c, const Weighting& w, const PathPool& pool);

/// Rescales so that the smallest weight is 1.
Weighting normalize(const Weighting& w);

/// Segment name -> "p/q", in segment order.
std::vector<std::pair<std::string, std::string>> format_witness(const Weighting& w,
                                                                const SubdividedGraph& sg);

}  // namespace geocover
