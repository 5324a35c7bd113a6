#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "codegraph/entities.hpp"

namespace codegraph {

/// DOT digraph, nodes then edges, both in lexicographic order so output is
/// byte-stable. Node label = entity name with a kind attribute; edge label =
/// relation.
std::string graph_to_dot(const OntologyGraph& graph);

/// {node_count, edge_count, build_seconds, nodes:[{name,kind,path}],
///  edges:[{src,dst,relation}]}, lexicographically ordered.
nlohmann::ordered_json graph_to_json(const OntologyGraph& graph, double build_seconds);

} // namespace codegraph
