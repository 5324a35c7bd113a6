#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace codegraph {

struct ExtractionRecord {
    std::string file_path;
    std::string class_name;
    std::vector<std::string> dependencies; // deduplicated on ingest
};

struct RecordParse {
    std::vector<ExtractionRecord> records;
    std::vector<std::string> warnings;
};

/// Reads {"results":[{file_path, class_name, dependencies}]}. Non-object
/// entries and non-string dependencies are dropped with a warning; duplicate
/// dependencies of one record collapse.
RecordParse parse_extraction_records(const nlohmann::json& doc);

enum class SkipUniqueness { Basename, FullPath };

/// Files with no extraction record: a file is skipped iff its normalized path
/// matches no record path AND no record shares its basename. Returns unique
/// sorted basenames (or unique sorted normalized paths under FullPath).
std::vector<std::string> detect_skips(const std::vector<std::string>& input_files,
                                      const std::vector<ExtractionRecord>& records,
                                      SkipUniqueness uniqueness = SkipUniqueness::Basename);

/// Separators to '/', "." and empty segments collapsed, ".." resolved
/// textually, case preserved.
std::string normalize_path(const std::string& path);

/// Throw std::invalid_argument on a zero denominator.
double file_success_rate(int n_processed, int n_files);
double chunk_coverage(int c_approach, int c_baseline);
double node_coverage(int nodes_approach, int nodes_reference);

struct AuditReport {
    int n_files = 0;
    int n_processed = 0;
    int n_skipped = 0;
    std::vector<std::string> skipped; // sorted
    double file_success_rate = 0.0;
};

AuditReport audit_files(const std::vector<std::string>& input_files,
                        const std::vector<ExtractionRecord>& records,
                        SkipUniqueness uniqueness = SkipUniqueness::Basename);

struct CoverageReport {
    int chunks_baseline = 0;
    int chunks_approach = 0;
    int nodes_reference = 0;
    int nodes_approach = 0;
    double chunk_coverage = 0.0;
    double node_coverage = 0.0;
};

CoverageReport coverage_report(int chunks_approach, int chunks_baseline, int nodes_approach,
                               int nodes_reference);

struct DependencyGraph {
    std::vector<std::string> nodes;                           // sorted, unique
    std::vector<std::pair<std::string, std::string>> edges;   // sorted, unique, depends_on
    int schema_violations = 0;                                // records rejected on ingest
};

const std::vector<std::string>& default_exclusion_prefixes(); // java., javax., jakarta., org.springframework.

/// One node per class_name plus bare nodes for project-local dependencies;
/// dependencies matching an exclusion prefix are dropped; self-edges are
/// dropped; records with an empty class_name are rejected and counted.
DependencyGraph build_dependency_graph(const std::vector<ExtractionRecord>& records,
                                       const std::vector<std::string>& exclusion_prefixes =
                                           default_exclusion_prefixes());

/// One document holding both reports plus dependency-graph counters; ratios
/// appear raw and rounded (half-up, 3 decimals).
nlohmann::ordered_json audit_to_json(const AuditReport& audit, const CoverageReport& coverage,
                                     const DependencyGraph& graph);

/// Text table with the audit's row labels; graph edge totals are labeled by
/// schema because counts under different edge vocabularies do not compare.
std::string audit_table(const AuditReport& audit, const CoverageReport& coverage,
                        const DependencyGraph& graph);

} // namespace codegraph
