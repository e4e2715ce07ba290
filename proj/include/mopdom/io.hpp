#pragma once

#include "mopdom/dual_tree.hpp"
#include "mopdom/graph.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mopdom {

/// {"n": 6, "chords": [[1,4],[1,5],[2,4]]}
nlohmann::json graph_to_json(const MopGraph& g);
/// Throws ParseError for malformed documents and the build_mop errors for
/// invalid graphs.
MopGraph graph_from_json(const nlohmann::json& j);

nlohmann::json set_to_json(const VertexSet& s);

/// One "u v" pair per line; blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_edge_list(std::istream& in);
std::string to_edge_list(const MopGraph& g);

/// Outer cycle drawn in order (cycle edges bold, chords dashed).
std::string to_dot(const MopGraph& g);
/// Dual tree with triangle labels, nodes colored by kind.
std::string dual_to_dot(const DualTree& t);

}  // namespace mopdom
