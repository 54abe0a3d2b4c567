#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geocover/graph.hpp"

namespace geocover {

/// Named graph families with deterministic vertex numbering:
///   complete n                K_n, vertices a, b, c, ...
///   complete_bipartite p q    K_{p,q}, first part lettered before the second
///   path n                    n edges, vertices v0..vn
///   cycle n                   n vertices (n = 1 is a loop, n = 2 a digon)
///   star n                    K_{1,n}, centre c, leaves l1..ln
///   caterpillar n             spine s0..sn plus one pendant leaf li per si
///   sawtooth n                n triangles (b_{i-1}, p_i, b_i) along a base b0..bn
///   bouquet n                 n loops on one vertex
/// Throws ContractError for an unknown tag or invalid parameter.
Multigraph build_standard(std::string_view tag, std::span<const int> params);

/// Tags accepted by build_standard, in documentation order.
std::vector<std::string> standard_graph_tags();

}  // namespace geocover
