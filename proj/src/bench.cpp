#include "codegraph/bench.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <utility>

#include "codegraph/context.hpp"
#include "codegraph/errors.hpp"
#include "codegraph/prompts.hpp"
#include "codegraph/text.hpp"

namespace codegraph {

QuestionSuite load_suite(const nlohmann::json& doc, const std::string& repository_label) {
    if (!doc.is_array() || doc.empty()) {
        throw FatalError("suite: expected a non-empty JSON array of question strings");
    }
    QuestionSuite suite;
    suite.repository_label = repository_label;
    for (const auto& item : doc) {
        if (!item.is_string()) {
            throw FatalError("suite: every question must be a string");
        }
        auto question = item.get<std::string>();
        if (question.empty()) {
            throw FatalError("suite: questions must be non-empty");
        }
        suite.questions.push_back(std::move(question));
    }
    return suite;
}

LatencyStats latency_stats(const std::vector<double>& times) {
    if (times.empty()) {
        throw std::invalid_argument("latency_stats: empty sample list");
    }
    LatencyStats stats;
    double sum = 0.0;
    for (double t : times) {
        sum += t;
    }
    const double count = static_cast<double>(times.size());
    stats.mean = sum / count;
    double squares = 0.0;
    for (double t : times) {
        const double delta = t - stats.mean;
        squares += delta * delta;
    }
    stats.std_dev = std::sqrt(squares / count);
    std::vector<double> sorted = times;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    stats.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    stats.min = sorted.front();
    stats.max = sorted.back();
    return stats;
}

double round_to_millis(double seconds) {
    return round_half_up3(seconds);
}

namespace {

struct GeneratorResult {
    std::string output;
    bool ok = false;
    std::string error;
};

/// Feeds the prompt to the command's stdin through a temp file and collects
/// stdout. Any nonzero exit is a failure.
GeneratorResult run_generator(const std::string& command, const std::string& prompt) {
    GeneratorResult result;
    std::string path = (std::filesystem::temp_directory_path() / "codegraph_prompt_XXXXXX").string();
    const int fd = ::mkstemp(path.data());
    if (fd < 0) {
        result.error = "generator: cannot create prompt file";
        return result;
    }
    FILE* prompt_file = ::fdopen(fd, "w");
    if (prompt_file == nullptr) {
        ::close(fd);
        std::remove(path.c_str());
        result.error = "generator: cannot open prompt file";
        return result;
    }
    const std::size_t written = std::fwrite(prompt.data(), 1, prompt.size(), prompt_file);
    const bool flushed = std::fclose(prompt_file) == 0;
    if (written != prompt.size() || !flushed) {
        std::remove(path.c_str());
        result.error = "generator: cannot write prompt file";
        return result;
    }
    const std::string shell = command + " < " + path;
    FILE* pipe = ::popen(shell.c_str(), "r");
    if (pipe == nullptr) {
        std::remove(path.c_str());
        result.error = "generator: cannot start command";
        return result;
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    std::remove(path.c_str());
    if (status != 0) {
        result.error = "generator: command exited with status " + std::to_string(status);
        return result;
    }
    result.ok = true;
    return result;
}

std::string nograph_context(const std::vector<RetrievalHit>& hits) {
    std::string text;
    for (const auto& hit : hits) {
        text += "\n--- FILE: " + hit.chunk.source_path + " ---\n";
        text += hit.chunk.text;
        text += "\n";
    }
    return text;
}

} // namespace

RunArtifact run_suite(const BenchPipeline& pipeline, const QuestionSuite& suite) {
    if (pipeline.index == nullptr) {
        throw FatalError("bench: pipeline has no index");
    }
    const bool graph_pipeline = pipeline.approach == "dkb";
    if (!graph_pipeline && pipeline.approach != "nograph") {
        throw FatalError("bench: unknown approach: " + pipeline.approach);
    }
    if (graph_pipeline && pipeline.graph == nullptr) {
        throw FatalError("bench: dkb pipeline has no graph");
    }

    RunArtifact artifact;
    artifact.approach = pipeline.approach;
    artifact.repository_label = suite.repository_label;
    artifact.generator = pipeline.generator_command.empty() ? "none" : pipeline.generator_command;
    artifact.db_gen_time = pipeline.db_gen_time;
    artifact.graph_generation_time = graph_pipeline ? pipeline.graph_generation_time : 0.0;

    for (const auto& question : suite.questions) {
        BenchResponse response;
        response.question = question;
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto hits = retrieve(*pipeline.index, question, pipeline.top_k);
            std::string context_text;
            if (graph_pipeline) {
                const auto seeds = entities_from_hits(hits, *pipeline.graph);
                const auto v_d = expand(*pipeline.graph, seeds, pipeline.expansion);
                const auto bundle = assemble_context(*pipeline.graph, v_d, seeds, hits,
                                                     pipeline.expansion, pipeline.root);
                context_text = render_context_text(bundle);
                response.context_summary =
                    "entities=" + std::to_string(bundle.included_entities.size()) +
                    " notes=" + std::to_string(bundle.ontology_notes.size()) +
                    " excerpts=" + std::to_string(bundle.excerpts.size()) +
                    " context_chars=" + std::to_string(utf8_length(context_text));
            } else {
                context_text = nograph_context(hits);
                response.context_summary = "hits=" + std::to_string(hits.size()) +
                                           " context_chars=" + std::to_string(utf8_length(context_text));
            }
            if (!pipeline.generator_command.empty()) {
                const char* tmpl = graph_pipeline ? prompts::kAnswerDkb : prompts::kAnswerNoGraph;
                const std::string prompt = prompts::render_answer(tmpl, context_text, question);
                GeneratorResult generated = run_generator(pipeline.generator_command, prompt);
                if (!generated.ok) {
                    throw FatalError(generated.error);
                }
                response.answer = std::move(generated.output);
            }
        } catch (const std::exception& err) {
            response.failed = true;
            response.error = err.what();
            response.context_summary.clear();
            response.answer.clear();
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        response.time_taken_seconds = round_to_millis(elapsed.count());
        if (response.failed) {
            ++artifact.failed_questions;
        }
        artifact.responses.push_back(std::move(response));
    }
    return artifact;
}

nlohmann::ordered_json artifact_to_json(const RunArtifact& artifact) {
    nlohmann::ordered_json doc;
    doc["approach"] = artifact.approach;
    doc["repository"] = artifact.repository_label;
    doc["generator"] = artifact.generator;
    doc["db_gen_time"] = artifact.db_gen_time;
    doc["graph_generation_time"] = artifact.graph_generation_time;
    doc["responses"] = nlohmann::ordered_json::array();
    std::vector<double> times;
    for (const auto& response : artifact.responses) {
        nlohmann::ordered_json row;
        row["question"] = response.question;
        row["context_summary"] = response.context_summary;
        row["time_taken_seconds"] = response.time_taken_seconds;
        row["failed"] = response.failed;
        row["error"] = response.error;
        row["answer"] = response.answer;
        doc["responses"].push_back(std::move(row));
        if (!response.failed) {
            times.push_back(response.time_taken_seconds);
        }
    }
    doc["failed_questions"] = artifact.failed_questions;
    if (times.empty()) {
        doc["latency_stats"] = nullptr;
    } else {
        const LatencyStats stats = latency_stats(times);
        nlohmann::ordered_json block;
        block["mean"] = stats.mean;
        block["std"] = stats.std_dev;
        block["std_definition"] = "population";
        block["median"] = stats.median;
        block["min"] = stats.min;
        block["max"] = stats.max;
        doc["latency_stats"] = std::move(block);
    }
    return doc;
}

RunArtifact artifact_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw FatalError("artifact: expected a JSON object");
    }
    RunArtifact artifact;
    artifact.approach = doc.value("approach", std::string{});
    artifact.repository_label = doc.value("repository", std::string{});
    artifact.generator = doc.value("generator", std::string{"none"});
    artifact.db_gen_time = doc.value("db_gen_time", 0.0);
    artifact.graph_generation_time = doc.value("graph_generation_time", 0.0);
    artifact.failed_questions = doc.value("failed_questions", 0);
    if (doc.contains("responses")) {
        if (!doc.at("responses").is_array()) {
            throw FatalError("artifact: responses must be an array");
        }
        for (const auto& row : doc.at("responses")) {
            BenchResponse response;
            response.question = row.value("question", std::string{});
            response.context_summary = row.value("context_summary", std::string{});
            response.time_taken_seconds = row.value("time_taken_seconds", 0.0);
            response.failed = row.value("failed", false);
            response.error = row.value("error", std::string{});
            response.answer = row.value("answer", std::string{});
            artifact.responses.push_back(std::move(response));
        }
    }
    return artifact;
}

} // namespace codegraph
