#include <doctest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "codegraph/graph_export.hpp"
#include "codegraph/ontology.hpp"

#include "support.hpp"

using namespace codegraph;

namespace {

OntologyGraph tiny_graph() {
    OntologyGraph::Builder builder;
    builder.add_entity(CodeEntity{"Svc", EntityKind::Class, "svc/Svc.java"});
    builder.add_entity(CodeEntity{"Api", EntityKind::Interface, "api/Api.java"});
    builder.add_edge("Svc", "Api", Relation::Implements);
    return builder.build();
}

} // namespace

TEST_CASE("graph_to_dot renders nodes then edges, lexicographically") {
    const std::string expected =
        "digraph codegraph {\n"
        "  \"Api\" [label=\"Api\", kind=\"interface\"];\n"
        "  \"Svc\" [label=\"Svc\", kind=\"class\"];\n"
        "  \"Svc\" -> \"Api\" [label=\"implements\"];\n"
        "}\n";
    CHECK(graph_to_dot(tiny_graph()) == expected);
}

TEST_CASE("graph_to_dot escapes quotes and backslashes") {
    OntologyGraph::Builder builder;
    builder.add_entity(CodeEntity{"Weird\"Name\\", EntityKind::Class, "w.java"});
    const std::string dot = graph_to_dot(builder.build());
    CHECK(dot.find("\"Weird\\\"Name\\\\\"") != std::string::npos);
}

TEST_CASE("empty graph exports") {
    const auto dot = graph_to_dot(OntologyGraph::Builder{}.build());
    CHECK(dot == "digraph codegraph {\n}\n");
    const auto doc = graph_to_json(OntologyGraph::Builder{}.build(), 0.0);
    CHECK(doc["node_count"] == 0);
    CHECK(doc["edge_count"] == 0);
    CHECK(doc["nodes"].empty());
    CHECK(doc["edges"].empty());
}

TEST_CASE("fixture DOT export matches the committed golden byte for byte") {
    const auto build = build_graph(testsupport::fixture_repo().string());
    const std::string golden = testsupport::slurp(testsupport::golden_path("fixture_graph.dot"));
    CHECK(graph_to_dot(build.graph) == golden);
}

TEST_CASE("fixture JSON export matches the committed golden") {
    const auto build = build_graph(testsupport::fixture_repo().string());
    const nlohmann::json produced = graph_to_json(build.graph, 0.0);
    const nlohmann::json golden =
        nlohmann::json::parse(testsupport::slurp(testsupport::golden_path("fixture_graph.json")));
    CHECK(produced == golden);
}

TEST_CASE("graph_to_json carries counts, kinds, paths, and relations") {
    const auto doc = graph_to_json(tiny_graph(), 2.5);
    CHECK(doc["node_count"] == 2);
    CHECK(doc["edge_count"] == 1);
    CHECK(doc["build_seconds"] == 2.5);
    REQUIRE(doc["nodes"].size() == 2);
    CHECK(doc["nodes"][0]["name"] == "Api");
    CHECK(doc["nodes"][0]["kind"] == "interface");
    CHECK(doc["nodes"][0]["path"] == "api/Api.java");
    REQUIRE(doc["edges"].size() == 1);
    CHECK(doc["edges"][0]["src"] == "Svc");
    CHECK(doc["edges"][0]["dst"] == "Api");
    CHECK(doc["edges"][0]["relation"] == "implements");
}
