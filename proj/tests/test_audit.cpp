#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codegraph/audit.hpp"

using namespace codegraph;

namespace {

ExtractionRecord record(std::string path, std::string name, std::vector<std::string> deps = {}) {
    return ExtractionRecord{std::move(path), std::move(name), std::move(deps)};
}

} // namespace

TEST_CASE("parse_extraction_records accepts both envelope shapes") {
    const auto doc = nlohmann::json::parse(R"({"results": [
        {"file_path": "a/A.java", "class_name": "A", "dependencies": ["B", "C"]},
        {"file_path": "b/B.java", "class_name": "B", "dependencies": []}
    ]})");
    const auto parsed = parse_extraction_records(doc);
    CHECK(parsed.warnings.empty());
    REQUIRE(parsed.records.size() == 2);
    CHECK(parsed.records[0].file_path == "a/A.java");
    CHECK(parsed.records[0].class_name == "A");
    CHECK(parsed.records[0].dependencies == std::vector<std::string>{"B", "C"});
    CHECK(parsed.records[1].dependencies.empty());

    const auto bare = parse_extraction_records(nlohmann::json::parse(
        R"([{"file_path": "a/A.java", "class_name": "A"}])"));
    CHECK(bare.warnings.empty());
    REQUIRE(bare.records.size() == 1);
    CHECK(bare.records[0].class_name == "A");
    CHECK(bare.records[0].dependencies.empty());
}

TEST_CASE("parse_extraction_records warns and recovers on malformed input") {
    const auto bad_envelope = parse_extraction_records(nlohmann::json::parse(R"({"foo": 1})"));
    CHECK(bad_envelope.records.empty());
    REQUIRE(bad_envelope.warnings.size() == 1);
    CHECK(bad_envelope.warnings[0] == "records: expected {\"results\": [...]} or a bare array");

    const auto mixed = parse_extraction_records(nlohmann::json::parse(R"([
        17,
        {"file_path": "a/A.java", "class_name": "A", "dependencies": ["B", 7, "B", "C"]},
        {"class_name": "D", "dependencies": "oops"}
    ])"));
    REQUIRE(mixed.records.size() == 2);
    CHECK(mixed.records[0].dependencies == std::vector<std::string>{"B", "C"}); // dedup + drop 7
    CHECK(mixed.records[1].file_path.empty());
    CHECK(mixed.records[1].dependencies.empty());
    REQUIRE(mixed.warnings.size() == 3);
    CHECK(mixed.warnings[0] == "records: entry 1 is not an object");
    CHECK(mixed.warnings[1] == "records: entry 2 has a non-string dependency");
    CHECK(mixed.warnings[2] == "records: entry 3 dependencies is not an array");
}

TEST_CASE("normalize_path") {
    CHECK(normalize_path("a\\b\\C.java") == "a/b/C.java");
    CHECK(normalize_path("./a") == "a");
    CHECK(normalize_path("a//b") == "a/b");
    CHECK(normalize_path("a/./b") == "a/b");
    CHECK(normalize_path("a/../b") == "b");
    CHECK(normalize_path("../a") == "../a");
    CHECK(normalize_path("a/b/../../c") == "c");
    CHECK(normalize_path("/a/../../b") == "/b"); // absolute paths never climb past the root
    CHECK(normalize_path("Case/Sensitive.java") == "Case/Sensitive.java");
    CHECK(normalize_path("") == ".");
    CHECK(normalize_path("./") == ".");
    CHECK(normalize_path("/") == "/");
}

TEST_CASE("detect_skips: complete records mean no skips") {
    const std::vector<std::string> files = {"src/a/A.java", "src/b/B.java"};
    const std::vector<ExtractionRecord> records = {record("src/a/A.java", "A"),
                                                   record("src/b/B.java", "B")};
    CHECK(detect_skips(files, records).empty());
}

TEST_CASE("detect_skips: basename fallback bridges path styles") {
    const std::vector<std::string> files = {"src/main/java/com/x/Cart.java"};
    const std::vector<ExtractionRecord> records = {record("Cart.java", "Cart")};
    CHECK(detect_skips(files, records).empty());

    const std::vector<ExtractionRecord> windows = {record("src\\main\\java\\com\\x\\Cart.java", "Cart")};
    CHECK(detect_skips(files, windows).empty());
}

TEST_CASE("detect_skips: omitted files surface as sorted basenames") {
    const std::vector<std::string> files = {"a/One.java", "a/Two.java", "b/Three.java",
                                            "b/Four.java", "c/Five.java"};
    const std::vector<ExtractionRecord> records = {record("a/One.java", "One"),
                                                   record("a/Two.java", "Two"),
                                                   record("c/Five.java", "Five")};
    CHECK(detect_skips(files, records) == std::vector<std::string>{"Four.java", "Three.java"});
}

TEST_CASE("detect_skips: uniqueness mode controls collision reporting") {
    const std::vector<std::string> files = {"a/Dup.java", "b/Dup.java"};
    const std::vector<ExtractionRecord> none;
    CHECK(detect_skips(files, none, SkipUniqueness::Basename) ==
          std::vector<std::string>{"Dup.java"});
    CHECK(detect_skips(files, none, SkipUniqueness::FullPath) ==
          std::vector<std::string>{"a/Dup.java", "b/Dup.java"});
}

TEST_CASE("detect_skips ignores records without a file path") {
    const std::vector<std::string> files = {"a/A.java"};
    const std::vector<ExtractionRecord> records = {record("", "A")};
    CHECK(detect_skips(files, records) == std::vector<std::string>{"A.java"});
}

TEST_CASE("rate helpers") {
    CHECK(file_success_rate(833, 1210) == doctest::Approx(833.0 / 1210.0).epsilon(1e-12));
    CHECK(file_success_rate(5, 5) == 1.0);
    CHECK(file_success_rate(0, 4) == 0.0);
    CHECK(chunk_coverage(3465, 5403) == doctest::Approx(3465.0 / 5403.0).epsilon(1e-12));
    CHECK(node_coverage(842, 1158) == doctest::Approx(842.0 / 1158.0).epsilon(1e-12));
    CHECK_THROWS_AS(file_success_rate(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(chunk_coverage(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(node_coverage(1, -3), std::invalid_argument);
}

TEST_CASE("audit_files balances its counters") {
    std::vector<std::string> files;
    std::vector<ExtractionRecord> records;
    for (int i = 0; i < 10; ++i) {
        files.push_back("pkg/File" + std::to_string(i) + ".java");
        if (i != 3 && i != 7) records.push_back(record(files.back(), "File" + std::to_string(i)));
    }
    const auto report = audit_files(files, records);
    CHECK(report.n_files == 10);
    CHECK(report.n_skipped == 2);
    CHECK(report.n_processed == 8);
    CHECK(report.n_processed + report.n_skipped == report.n_files);
    CHECK(report.file_success_rate == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(report.skipped == std::vector<std::string>{"File3.java", "File7.java"});
}

TEST_CASE("build_dependency_graph filters framework imports") {
    const std::vector<ExtractionRecord> records = {
        record("a/A.java", "A",
               {"B", "java.util.List", "javax.inject.Inject", "jakarta.persistence.Entity",
                "org.springframework.stereotype.Service", "javafx.scene.Node", ""}),
    };
    const auto graph = build_dependency_graph(records);
    CHECK(graph.nodes == std::vector<std::string>{"A", "B", "javafx.scene.Node"});
    CHECK(graph.edges == std::vector<std::pair<std::string, std::string>>{
                             {"A", "B"}, {"A", "javafx.scene.Node"}});
    CHECK(graph.schema_violations == 0);
}

TEST_CASE("build_dependency_graph edge hygiene") {
    SUBCASE("empty input") {
        const auto graph = build_dependency_graph({});
        CHECK(graph.nodes.empty());
        CHECK(graph.edges.empty());
    }
    SUBCASE("duplicate dependencies collapse to one edge") {
        const auto graph = build_dependency_graph({record("a/A.java", "A", {"B", "B"})});
        CHECK(graph.edges.size() == 1);
    }
    SUBCASE("self edges are dropped") {
        const auto graph = build_dependency_graph({record("a/A.java", "A", {"A"})});
        CHECK(graph.nodes == std::vector<std::string>{"A"});
        CHECK(graph.edges.empty());
    }
    SUBCASE("empty class_name is a schema violation") {
        const auto graph = build_dependency_graph({record("a/A.java", "", {"B"}),
                                                   record("b/B.java", "B")});
        CHECK(graph.schema_violations == 1);
        CHECK(graph.nodes == std::vector<std::string>{"B"});
        CHECK(graph.edges.empty());
    }
    SUBCASE("dependencies become bare nodes") {
        const auto graph = build_dependency_graph({record("a/A.java", "A", {"Zeta"})});
        CHECK(graph.nodes == std::vector<std::string>{"A", "Zeta"});
    }
    SUBCASE("custom exclusion prefixes replace the defaults") {
        const auto graph = build_dependency_graph(
            {record("a/A.java", "A", {"com.example.Gone", "java.util.List"})},
            {"com.example."});
        CHECK(graph.nodes == std::vector<std::string>{"A", "java.util.List"});
    }
}

TEST_CASE("audit_to_json carries raw and rounded ratios") {
    std::vector<std::string> files;
    for (int i = 0; i < 4; ++i) files.push_back("F" + std::to_string(i) + ".java");
    const std::vector<ExtractionRecord> records = {record("F0.java", "F0"), record("F1.java", "F1"),
                                                   record("F2.java", "F2")};
    const auto audit = audit_files(files, records);
    const auto coverage = coverage_report(3465, 5403, 842, 1158);
    const auto graph = build_dependency_graph(records);
    const auto doc = audit_to_json(audit, coverage, graph);

    CHECK(doc["audit"]["n_files"] == 4);
    CHECK(doc["audit"]["n_processed"] == 3);
    CHECK(doc["audit"]["n_skipped"] == 1);
    CHECK(doc["audit"]["file_success_rate"].get<double>() == doctest::Approx(0.75));
    CHECK(doc["audit"]["file_success_rate_rounded"].get<double>() == 0.75);
    CHECK(doc["audit"]["skipped"] == nlohmann::ordered_json::array({"F3.java"}));
    CHECK(doc["coverage"]["chunks_baseline"] == 5403);
    CHECK(doc["coverage"]["chunks_approach"] == 3465);
    CHECK(doc["coverage"]["chunk_coverage_rounded"].get<double>() == 0.641);
    CHECK(doc["coverage"]["nodes_reference"] == 1158);
    CHECK(doc["coverage"]["nodes_approach"] == 842);
    CHECK(doc["coverage"]["node_coverage_rounded"].get<double>() == 0.727);
    CHECK(doc["coverage"]["chunk_coverage"].get<double>() ==
          doctest::Approx(3465.0 / 5403.0).epsilon(1e-12));
    CHECK(doc["dependency_graph"]["node_count"] == 3);
    CHECK(doc["dependency_graph"]["edge_count"] == 0);
    CHECK(doc["dependency_graph"]["edge_schema"] == "depends_on");
    CHECK(doc["dependency_graph"]["schema_violations"] == 0);
}

TEST_CASE("audit_table prints every labeled row plus the schema caveat") {
    AuditReport audit;
    audit.n_files = 1210;
    audit.n_skipped = 377;
    audit.n_processed = 833;
    audit.file_success_rate = file_success_rate(833, 1210);
    const auto coverage = coverage_report(3465, 5403, 842, 1158);
    DependencyGraph graph;
    graph.nodes = {"A", "B"};
    graph.edges = {{"A", "B"}};

    const auto table = audit_table(audit, coverage, graph);
    for (const char* label :
         {"Total Java files discovered", "Files skipped/missed by LLM",
          "Files successfully analyzed", "File success rate", "Total code chunks embedded",
          "  (baseline chunks)", "Chunk coverage (vs No-Graph)", "Graph nodes",
          "  (reference nodes)", "Graph edges (depends_on schema)", "Node coverage (vs DKB)"}) {
        CHECK_MESSAGE(table.find(label) != std::string::npos, label);
    }
    CHECK(table.find("0.688") != std::string::npos);
    CHECK(table.find("0.641") != std::string::npos);
    CHECK(table.find("0.727") != std::string::npos);
    const std::string caveat =
        "Edge totals are schema-dependent; depends_on counts do not compare to typed-edge counts.\n";
    REQUIRE(table.size() >= caveat.size());
    CHECK(table.substr(table.size() - caveat.size()) == caveat);
}

TEST_CASE("random record deletion is recovered exactly") {
    std::mt19937_64 rng(31415926);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 96);
        std::vector<std::string> files;
        for (int i = 0; i < n; ++i) {
            files.push_back("pkg" + std::to_string(i % 7) + "/Type" + std::to_string(i) + ".java");
        }
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        const int k = static_cast<int>(rng() % n); // leave at least one record
        std::set<int> dropped(order.begin(), order.begin() + k);

        std::vector<ExtractionRecord> records;
        std::set<std::string> expected;
        for (int i = 0; i < n; ++i) {
            if (dropped.count(i)) {
                expected.insert("Type" + std::to_string(i) + ".java");
            } else {
                records.push_back(record(files[i], "Type" + std::to_string(i)));
            }
        }
        const auto report = audit_files(files, records);
        CHECK(report.skipped == std::vector<std::string>(expected.begin(), expected.end()));
        CHECK(report.n_processed + report.n_skipped == report.n_files);
        CHECK(report.file_success_rate ==
              doctest::Approx(static_cast<double>(n - k) / n).epsilon(1e-12));
    }
}
