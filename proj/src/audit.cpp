#include "codegraph/audit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "codegraph/text.hpp"

namespace codegraph {

RecordParse parse_extraction_records(const nlohmann::json& doc) {
    RecordParse out;
    const nlohmann::json* results = nullptr;
    if (doc.is_array()) {
        results = &doc;
    } else if (doc.is_object() && doc.contains("results") && doc["results"].is_array()) {
        results = &doc["results"];
    } else {
        out.warnings.push_back("records: expected {\"results\": [...]} or a bare array");
        return out;
    }
    std::size_t position = 0;
    for (const auto& entry : *results) {
        ++position;
        if (!entry.is_object()) {
            out.warnings.push_back("records: entry " + std::to_string(position) + " is not an object");
            continue;
        }
        ExtractionRecord record;
        if (entry.contains("file_path") && entry["file_path"].is_string()) {
            record.file_path = entry["file_path"].get<std::string>();
        }
        if (entry.contains("class_name") && entry["class_name"].is_string()) {
            record.class_name = entry["class_name"].get<std::string>();
        }
        if (entry.contains("dependencies")) {
            if (!entry["dependencies"].is_array()) {
                out.warnings.push_back("records: entry " + std::to_string(position) +
                                       " dependencies is not an array");
            } else {
                std::set<std::string> seen;
                for (const auto& dep : entry["dependencies"]) {
                    if (!dep.is_string()) {
                        out.warnings.push_back("records: entry " + std::to_string(position) +
                                               " has a non-string dependency");
                        continue;
                    }
                    auto name = dep.get<std::string>();
                    if (seen.insert(name).second) record.dependencies.push_back(std::move(name));
                }
            }
        }
        out.records.push_back(std::move(record));
    }
    return out;
}

std::string normalize_path(const std::string& path) {
    std::string unified = path;
    std::replace(unified.begin(), unified.end(), '\\', '/');
    const bool absolute = !unified.empty() && unified.front() == '/';

    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i <= unified.size()) {
        std::size_t j = unified.find('/', i);
        if (j == std::string::npos) j = unified.size();
        std::string segment = unified.substr(i, j - i);
        i = j + 1;
        if (segment.empty() || segment == ".") continue;
        if (segment == "..") {
            if (!stack.empty() && stack.back() != "..") {
                stack.pop_back();
            } else if (!absolute) {
                stack.push_back("..");
            }
            continue;
        }
        stack.push_back(std::move(segment));
    }
    std::string out = absolute ? "/" : "";
    for (std::size_t k = 0; k < stack.size(); ++k) {
        if (k) out.push_back('/');
        out += stack[k];
    }
    if (out.empty()) out = ".";
    return out;
}

static std::string path_basename(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::vector<std::string> detect_skips(const std::vector<std::string>& input_files,
                                      const std::vector<ExtractionRecord>& records,
                                      SkipUniqueness uniqueness) {
    std::set<std::string> record_paths;
    std::set<std::string> record_basenames;
    for (const auto& record : records) {
        if (record.file_path.empty()) continue;
        std::string norm = normalize_path(record.file_path);
        record_basenames.insert(path_basename(norm));
        record_paths.insert(std::move(norm));
    }
    std::set<std::string> skipped;
    for (const auto& file : input_files) {
        std::string norm = normalize_path(file);
        if (record_paths.count(norm)) continue;
        std::string base = path_basename(norm);
        if (record_basenames.count(base)) continue;
        skipped.insert(uniqueness == SkipUniqueness::Basename ? std::move(base) : std::move(norm));
    }
    return {skipped.begin(), skipped.end()};
}

double file_success_rate(int n_processed, int n_files) {
    if (n_files <= 0) throw std::invalid_argument("undefined rate: n_files must be positive");
    return static_cast<double>(n_processed) / static_cast<double>(n_files);
}

double chunk_coverage(int c_approach, int c_baseline) {
    if (c_baseline <= 0) throw std::invalid_argument("undefined rate: baseline chunk count must be positive");
    return static_cast<double>(c_approach) / static_cast<double>(c_baseline);
}

double node_coverage(int nodes_approach, int nodes_reference) {
    if (nodes_reference <= 0) {
        throw std::invalid_argument("undefined rate: reference node count must be positive");
    }
    return static_cast<double>(nodes_approach) / static_cast<double>(nodes_reference);
}

AuditReport audit_files(const std::vector<std::string>& input_files,
                        const std::vector<ExtractionRecord>& records, SkipUniqueness uniqueness) {
    AuditReport report;
    report.n_files = static_cast<int>(input_files.size());
    report.skipped = detect_skips(input_files, records, uniqueness);
    report.n_skipped = static_cast<int>(report.skipped.size());
    report.n_processed = report.n_files - report.n_skipped;
    report.file_success_rate = file_success_rate(report.n_processed, report.n_files);
    return report;
}

CoverageReport coverage_report(int chunks_approach, int chunks_baseline, int nodes_approach,
                               int nodes_reference) {
    CoverageReport report;
    report.chunks_approach = chunks_approach;
    report.chunks_baseline = chunks_baseline;
    report.nodes_approach = nodes_approach;
    report.nodes_reference = nodes_reference;
    report.chunk_coverage = chunk_coverage(chunks_approach, chunks_baseline);
    report.node_coverage = node_coverage(nodes_approach, nodes_reference);
    return report;
}

const std::vector<std::string>& default_exclusion_prefixes() {
    static const std::vector<std::string> prefixes = {"java.", "javax.", "jakarta.",
                                                      "org.springframework."};
    return prefixes;
}

DependencyGraph build_dependency_graph(const std::vector<ExtractionRecord>& records,
                                       const std::vector<std::string>& exclusion_prefixes) {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    DependencyGraph graph;
    auto excluded = [&](const std::string& dep) {
        for (const auto& prefix : exclusion_prefixes) {
            if (dep.size() >= prefix.size() && dep.compare(0, prefix.size(), prefix) == 0) return true;
        }
        return false;
    };
    for (const auto& record : records) {
        if (record.class_name.empty()) {
            ++graph.schema_violations;
            continue;
        }
        nodes.insert(record.class_name);
        for (const auto& dep : record.dependencies) {
            if (dep.empty() || dep == record.class_name || excluded(dep)) continue;
            nodes.insert(dep);
            edges.emplace(record.class_name, dep);
        }
    }
    graph.nodes.assign(nodes.begin(), nodes.end());
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
}

nlohmann::ordered_json audit_to_json(const AuditReport& audit, const CoverageReport& coverage,
                                     const DependencyGraph& graph) {
    nlohmann::ordered_json doc;
    doc["audit"] = {{"n_files", audit.n_files},
                    {"n_processed", audit.n_processed},
                    {"n_skipped", audit.n_skipped},
                    {"file_success_rate", audit.file_success_rate},
                    {"file_success_rate_rounded", round_half_up3(audit.file_success_rate)},
                    {"skipped", audit.skipped}};
    doc["coverage"] = {{"chunks_baseline", coverage.chunks_baseline},
                       {"chunks_approach", coverage.chunks_approach},
                       {"chunk_coverage", coverage.chunk_coverage},
                       {"chunk_coverage_rounded", round_half_up3(coverage.chunk_coverage)},
                       {"nodes_reference", coverage.nodes_reference},
                       {"nodes_approach", coverage.nodes_approach},
                       {"node_coverage", coverage.node_coverage},
                       {"node_coverage_rounded", round_half_up3(coverage.node_coverage)}};
    doc["dependency_graph"] = {{"node_count", graph.nodes.size()},
                               {"edge_count", graph.edges.size()},
                               {"edge_schema", "depends_on"},
                               {"schema_violations", graph.schema_violations}};
    return doc;
}

std::string audit_table(const AuditReport& audit, const CoverageReport& coverage,
                        const DependencyGraph& graph) {
    std::string out;
    char line[160];
    auto row_int = [&](const char* label, long long value) {
        std::snprintf(line, sizeof line, "%-34s %lld\n", label, value);
        out += line;
    };
    auto row_ratio = [&](const char* label, double value) {
        std::snprintf(line, sizeof line, "%-34s %.3f\n", label, round_half_up3(value));
        out += line;
    };
    row_int("Total Java files discovered", audit.n_files);
    row_int("Files skipped/missed by LLM", audit.n_skipped);
    row_int("Files successfully analyzed", audit.n_processed);
    row_ratio("File success rate", audit.file_success_rate);
    row_int("Total code chunks embedded", coverage.chunks_approach);
    std::snprintf(line, sizeof line, "%-34s %d\n", "  (baseline chunks)", coverage.chunks_baseline);
    out += line;
    row_ratio("Chunk coverage (vs No-Graph)", coverage.chunk_coverage);
    row_int("Graph nodes", coverage.nodes_approach);
    std::snprintf(line, sizeof line, "%-34s %d\n", "  (reference nodes)", coverage.nodes_reference);
    out += line;
    row_int("Graph edges (depends_on schema)", static_cast<long long>(graph.edges.size()));
    row_ratio("Node coverage (vs DKB)", coverage.node_coverage);
    out += "Edge totals are schema-dependent; depends_on counts do not compare to typed-edge counts.\n";
    return out;
}

} // namespace codegraph
