#include "codegraph/graph_export.hpp"

#include <sstream>

namespace codegraph {

static std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string graph_to_dot(const OntologyGraph& graph) {
    std::ostringstream out;
    out << "digraph codegraph {\n";
    for (const auto& entity : graph.entities()) {
        out << "  " << dot_quote(entity.name) << " [label=" << dot_quote(entity.name)
            << ", kind=" << dot_quote(to_string(entity.kind)) << "];\n";
    }
    for (const auto& edge : graph.edges()) {
        out << "  " << dot_quote(edge.src) << " -> " << dot_quote(edge.dst)
            << " [label=" << dot_quote(to_string(edge.relation)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json graph_to_json(const OntologyGraph& graph, double build_seconds) {
    nlohmann::ordered_json doc;
    doc["node_count"] = graph.node_count();
    doc["edge_count"] = graph.edge_count();
    doc["build_seconds"] = build_seconds;
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& entity : graph.entities()) {
        nodes.push_back({{"name", entity.name}, {"kind", to_string(entity.kind)}, {"path", entity.path}});
    }
    doc["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& edge : graph.edges()) {
        edges.push_back({{"src", edge.src}, {"dst", edge.dst}, {"relation", to_string(edge.relation)}});
    }
    doc["edges"] = std::move(edges);
    return doc;
}

} // namespace codegraph
