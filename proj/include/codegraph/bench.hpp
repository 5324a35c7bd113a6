#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codegraph/chunk_index.hpp"
#include "codegraph/entities.hpp"
#include "codegraph/expansion.hpp"

namespace codegraph {

struct QuestionSuite {
    std::string repository_label;
    std::vector<std::string> questions;
};

/// Suite files are a JSON array of non-empty question strings. Throws
/// FatalError on any other shape.
QuestionSuite load_suite(const nlohmann::json& doc, const std::string& repository_label);

struct BenchResponse {
    std::string question;
    std::string context_summary;
    double time_taken_seconds = 0.0;
    bool failed = false;
    std::string error;  // non-empty iff failed
    std::string answer; // generator output; empty under the stub
};

struct LatencyStats {
    double mean = 0.0;
    double std_dev = 0.0; // population standard deviation
    double median = 0.0;  // midpoint of the two middle samples for even sizes
    double min = 0.0;
    double max = 0.0;
};

/// Throws std::invalid_argument on an empty sample list.
LatencyStats latency_stats(const std::vector<double>& times);

struct BenchPipeline {
    std::string approach; // "nograph" or "dkb"
    std::string root;
    const ChunkIndex* index = nullptr;
    const OntologyGraph* graph = nullptr; // required for dkb
    int top_k = 10;
    ExpansionConfig expansion;
    std::string generator_command; // empty runs the no-op stub
    double db_gen_time = 0.0;
    double graph_generation_time = 0.0; // stays 0 for nograph
};

struct RunArtifact {
    std::string approach;
    std::string repository_label;
    std::string generator = "none";
    double db_gen_time = 0.0;
    double graph_generation_time = 0.0;
    std::vector<BenchResponse> responses;
    int failed_questions = 0;
};

/// Runs every question in order: retrieve, then (graph pipelines) expand and
/// assemble, timing the end-to-end path on the monotonic clock at millisecond
/// resolution. A failing question records an error note and its time; the
/// suite continues. With a generator command, the rendered answer prompt is
/// piped to its stdin and stdout becomes the answer (timed as part of the
/// question).
RunArtifact run_suite(const BenchPipeline& pipeline, const QuestionSuite& suite);

/// Stats over successful responses; failures are excluded and counted.
/// The artifact JSON carries the std definition so the numbers are
/// self-describing; latency_stats is null when every question failed.
nlohmann::ordered_json artifact_to_json(const RunArtifact& artifact);
RunArtifact artifact_from_json(const nlohmann::json& doc);

/// Half-up rounding at millisecond resolution.
double round_to_millis(double seconds);

} // namespace codegraph
