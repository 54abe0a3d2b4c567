#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geocover/graph.hpp"

namespace geocover {

using Json = nlohmann::ordered_json;

/// Whole file as a string; ParseError if it cannot be read.
std::string read_text_file(const std::string& path);

/// Graph document:
///   {"vertices": ["a", "b", ...], "edges": [["a", "b"], [0, 1], ...]}
/// Edge ends are vertex names or indices. An optional "name" string is
/// accepted; other keys are rejected. Errors are ParseError with a line and
/// column for syntax problems, or a field path for content problems.
Multigraph parse_graph(std::string_view text);
Json graph_to_json(const Multigraph& g);

/// Cover document: {"paths": [...]} where each path is either a list of
/// vertex names of the 2-subdivision ("a", "a-b", "b", ...) or, when a loop
/// makes that ambiguous, {"vertices": [...], "segments": ["v-v:0", ...]}.
/// Paths must be simple with distinct ends; they are returned canonical.
std::vector<PathSeq> parse_cover(std::string_view text, const SubdividedGraph& sg);
Json cover_to_json(std::span<const PathSeq> paths, const SubdividedGraph& sg);
Json path_to_json(const PathSeq& p, const SubdividedGraph& sg);

/// Weights document: {"default": "1", "weights": {"a-b:0": "3/2", ...}}.
/// Either key may be omitted; every segment must end up with a value.
Weighting parse_weights(std::string_view text, const SubdividedGraph& sg);
Json weights_to_json(const Weighting& w, const SubdividedGraph& sg);

/// DOT drawing of the 2-subdivision. Midpoints are small dots; each segment
/// carries one color per cover path through it, and weights become labels.
std::string to_dot(const SubdividedGraph& sg, std::span<const PathSeq> paths,
                   const std::optional<Weighting>& weights = std::nullopt,
                   const std::string& title = "G");

}  // namespace geocover
