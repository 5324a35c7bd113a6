#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "codegraph/audit.hpp"
#include "codegraph/bench.hpp"
#include "codegraph/chunk_index.hpp"
#include "codegraph/context.hpp"
#include "codegraph/errors.hpp"
#include "codegraph/expansion.hpp"
#include "codegraph/graph_export.hpp"
#include "codegraph/ontology.hpp"
#include "codegraph/text.hpp"

namespace {

struct CliConfig {
    std::string root;
    int chunk_size = 1000;
    int chunk_overlap = 100;
    int top_k = 10;
    int depth = 1;
    bool no_interface_expansion = false;
    bool real_timing = false;
    std::string out;
    std::string export_format = "json";
    std::string text;
    std::string records;
    bool table = false;
    bool full_path_uniqueness = false;
    bool replay = false;
    int n_files = 0;
    int n_skipped = 0;
    int chunks_baseline = 0;
    int chunks_approach = 0;
    int nodes_reference = 0;
    int nodes_approach = 0;
    std::string suite;
    std::string approach;
    std::string label;
    std::string generator;
};

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& warning : warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        throw codegraph::FatalError("cannot open output file: " + out);
    }
    file << text;
    file.flush();
    if (!file) {
        throw codegraph::FatalError("cannot write output file: " + out);
    }
}

/// CLI outputs are pretty-printed with sorted keys so reruns diff cleanly.
std::string sorted_dump(const nlohmann::ordered_json& doc) {
    return nlohmann::json::parse(doc.dump()).dump(2) + "\n";
}

nlohmann::json parse_json_file(const std::string& path, const std::string& what) {
    const auto doc = nlohmann::json::parse(codegraph::read_file(path), nullptr, false);
    if (doc.is_discarded()) {
        throw codegraph::FatalError(what + ": not valid JSON: " + path);
    }
    return doc;
}

void require_root(const CliConfig& config) {
    if (config.root.empty()) {
        throw codegraph::FatalError("missing --root (or CODEGRAPH_ROOT)");
    }
}

/// Timing fields are zeroed unless --real-timing is set, keeping reruns on
/// unchanged inputs byte-identical; real timings always go to stderr.
double stamp(const CliConfig& config, double seconds) {
    return config.real_timing ? seconds : 0.0;
}

codegraph::ExpansionConfig expansion_config(const CliConfig& config) {
    codegraph::ExpansionConfig expansion;
    expansion.depth = config.depth;
    expansion.interface_expansion = !config.no_interface_expansion;
    return expansion;
}

int cmd_index(const CliConfig& config) {
    require_root(config);
    const auto scan = codegraph::scan_repository(config.root);
    print_warnings(scan.warnings);
    const auto start = std::chrono::steady_clock::now();
    const auto index = codegraph::build_index(config.root, scan.files, std::nullopt,
                                              static_cast<std::size_t>(config.chunk_size),
                                              static_cast<std::size_t>(config.chunk_overlap));
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    print_warnings(index.warnings);
    std::cerr << "index: " << index.total_chunks() << " chunks from " << scan.files.size()
              << " files in " << elapsed.count() << "s\n";
    write_output(config.out, sorted_dump(codegraph::index_manifest(index, stamp(config, elapsed.count()))));
    return 0;
}

int cmd_graph(const CliConfig& config) {
    require_root(config);
    const auto build = codegraph::build_graph(config.root);
    print_warnings(build.warnings);
    std::cerr << "graph: " << build.graph.node_count() << " nodes, " << build.graph.edge_count()
              << " edges in " << build.graph.build_seconds() << "s\n";
    if (config.export_format == "dot") {
        write_output(config.out, codegraph::graph_to_dot(build.graph));
    } else {
        write_output(config.out, sorted_dump(codegraph::graph_to_json(
                                     build.graph, stamp(config, build.graph.build_seconds()))));
    }
    return 0;
}

int cmd_query(const CliConfig& config) {
    require_root(config);
    const auto start = std::chrono::steady_clock::now();
    const auto build = codegraph::build_graph(config.root);
    print_warnings(build.warnings);
    const auto index = codegraph::build_index(config.root, build.files, std::nullopt,
                                              static_cast<std::size_t>(config.chunk_size),
                                              static_cast<std::size_t>(config.chunk_overlap));
    print_warnings(index.warnings);
    const auto hits = codegraph::retrieve(index, config.text, config.top_k);
    const auto expansion = expansion_config(config);
    const auto seeds = codegraph::entities_from_hits(hits, build.graph);
    const auto v_d = codegraph::expand(build.graph, seeds, expansion);
    const auto bundle =
        codegraph::assemble_context(build.graph, v_d, seeds, hits, expansion, config.root);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "query: " << hits.size() << " hits, " << bundle.included_entities.size()
              << " entities, " << bundle.excerpts.size() << " excerpts in " << elapsed.count()
              << "s\n";
    write_output(config.out, sorted_dump(codegraph::bundle_to_json(bundle, config.text,
                                                                   stamp(config, elapsed.count()))));
    return 0;
}

int cmd_audit(const CliConfig& config) {
    const auto uniqueness = config.full_path_uniqueness ? codegraph::SkipUniqueness::FullPath
                                                        : codegraph::SkipUniqueness::Basename;
    codegraph::AuditReport audit;
    codegraph::CoverageReport coverage;
    codegraph::DependencyGraph dependency_graph;
    if (config.replay) {
        audit.n_files = config.n_files;
        audit.n_skipped = config.n_skipped;
        audit.n_processed = config.n_files - config.n_skipped;
        audit.file_success_rate = codegraph::file_success_rate(audit.n_processed, audit.n_files);
        coverage = codegraph::coverage_report(config.chunks_approach, config.chunks_baseline,
                                              config.nodes_approach, config.nodes_reference);
    } else {
        require_root(config);
        if (config.records.empty()) {
            throw codegraph::FatalError("audit: --records is required unless --replay is set");
        }
        auto parsed =
            codegraph::parse_extraction_records(parse_json_file(config.records, "audit records"));
        print_warnings(parsed.warnings);
        const auto scan = codegraph::scan_repository(config.root);
        print_warnings(scan.warnings);
        audit = codegraph::audit_files(scan.files, parsed.records, uniqueness);

        const auto skipped_paths =
            codegraph::detect_skips(scan.files, parsed.records, codegraph::SkipUniqueness::FullPath);
        const std::set<std::string> skip_set(skipped_paths.begin(), skipped_paths.end());
        std::set<std::string> processed;
        for (const auto& file : scan.files) {
            if (skip_set.count(codegraph::normalize_path(file)) == 0) {
                processed.insert(file);
            }
        }
        const auto baseline =
            codegraph::build_index(config.root, scan.files, std::nullopt,
                                   static_cast<std::size_t>(config.chunk_size),
                                   static_cast<std::size_t>(config.chunk_overlap));
        print_warnings(baseline.warnings);
        const auto approach =
            codegraph::build_index(config.root, scan.files, processed,
                                   static_cast<std::size_t>(config.chunk_size),
                                   static_cast<std::size_t>(config.chunk_overlap));
        print_warnings(approach.warnings);
        const auto reference = codegraph::build_graph(config.root);
        print_warnings(reference.warnings);
        dependency_graph = codegraph::build_dependency_graph(parsed.records);
        coverage = codegraph::coverage_report(static_cast<int>(approach.total_chunks()),
                                              static_cast<int>(baseline.total_chunks()),
                                              static_cast<int>(dependency_graph.nodes.size()),
                                              static_cast<int>(reference.graph.node_count()));
    }
    if (config.table) {
        write_output(config.out, codegraph::audit_table(audit, coverage, dependency_graph));
    } else {
        write_output(config.out, sorted_dump(codegraph::audit_to_json(audit, coverage, dependency_graph)));
    }
    return 0;
}

int cmd_bench(const CliConfig& config) {
    require_root(config);
    std::string label = config.label;
    if (label.empty()) {
        label = std::filesystem::path(config.root).filename().string();
        if (label.empty()) {
            label = config.root;
        }
    }
    const auto suite = codegraph::load_suite(parse_json_file(config.suite, "bench suite"), label);

    codegraph::BenchPipeline pipeline;
    pipeline.approach = config.approach;
    pipeline.root = config.root;
    pipeline.top_k = config.top_k;
    pipeline.expansion = expansion_config(config);
    pipeline.generator_command = config.generator;

    codegraph::GraphBuild build;
    std::vector<std::string> files;
    if (config.approach == "dkb") {
        build = codegraph::build_graph(config.root);
        print_warnings(build.warnings);
        pipeline.graph = &build.graph;
        pipeline.graph_generation_time = build.graph.build_seconds();
        files = build.files;
    } else {
        auto scan = codegraph::scan_repository(config.root);
        print_warnings(scan.warnings);
        files = std::move(scan.files);
    }
    const auto start = std::chrono::steady_clock::now();
    const auto index = codegraph::build_index(config.root, files, std::nullopt,
                                              static_cast<std::size_t>(config.chunk_size),
                                              static_cast<std::size_t>(config.chunk_overlap));
    const std::chrono::duration<double> db_elapsed = std::chrono::steady_clock::now() - start;
    print_warnings(index.warnings);
    pipeline.index = &index;
    pipeline.db_gen_time = db_elapsed.count();

    auto artifact = codegraph::run_suite(pipeline, suite);

    double total = 0.0;
    for (const auto& response : artifact.responses) {
        total += response.time_taken_seconds;
    }
    std::cerr << "bench: " << artifact.responses.size() << " questions, "
              << artifact.failed_questions << " failed, " << total << "s answering, "
              << pipeline.db_gen_time << "s indexing\n";
    if (!config.real_timing) {
        artifact.db_gen_time = 0.0;
        artifact.graph_generation_time = 0.0;
        for (auto& response : artifact.responses) {
            response.time_taken_seconds = 0.0;
        }
    }
    const std::string out = config.out.empty() ? config.approach + "_rag_response.json" : config.out;
    write_output(out, sorted_dump(codegraph::artifact_to_json(artifact)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CliConfig config;
    CLI::App app{"deterministic code knowledge graph retrieval for Java repositories"};
    app.require_subcommand(1);

    const auto add_root = [&config](CLI::App* cmd) {
        cmd->add_option("--root", config.root, "repository root directory")
            ->envname("CODEGRAPH_ROOT");
    };
    const auto add_chunking = [&config](CLI::App* cmd) {
        cmd->add_option("--chunk-size", config.chunk_size, "chunk size in characters")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--chunk-overlap", config.chunk_overlap, "chunk overlap in characters")
            ->check(CLI::NonNegativeNumber);
    };
    const auto add_retrieval = [&config](CLI::App* cmd) {
        cmd->add_option("--k", config.top_k, "retrieval depth")->check(CLI::PositiveNumber);
        cmd->add_option("--depth", config.depth, "expansion hop bound")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag("--no-interface-expansion", config.no_interface_expansion,
                      "disable the interface consumer rule");
    };
    const auto add_out = [&config](CLI::App* cmd) {
        cmd->add_option("--out", config.out, "output file (stdout when omitted)");
    };
    const auto add_real_timing = [&config](CLI::App* cmd) {
        cmd->add_flag("--real-timing", config.real_timing,
                      "write measured timings instead of stable zeros");
    };

    auto* index_cmd = app.add_subcommand("index", "chunk the repository and write the manifest");
    add_root(index_cmd);
    add_chunking(index_cmd);
    add_out(index_cmd);
    add_real_timing(index_cmd);

    auto* graph_cmd = app.add_subcommand("graph", "build the ontology graph and export it");
    add_root(graph_cmd);
    graph_cmd->add_option("--export", config.export_format, "export format")
        ->check(CLI::IsMember({"dot", "json"}));
    add_out(graph_cmd);
    add_real_timing(graph_cmd);

    auto* query_cmd = app.add_subcommand("query", "assemble graph-aware context for a question");
    add_root(query_cmd);
    add_chunking(query_cmd);
    add_retrieval(query_cmd);
    query_cmd->add_option("--text", config.text, "the question")->required();
    add_out(query_cmd);
    add_real_timing(query_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "extraction completeness and coverage report");
    add_root(audit_cmd);
    add_chunking(audit_cmd);
    audit_cmd->add_option("--records", config.records, "extraction records JSON file");
    audit_cmd->add_flag("--table", config.table, "write the text table instead of JSON");
    audit_cmd->add_flag("--full-path-uniqueness", config.full_path_uniqueness,
                        "report skips as full paths instead of basenames");
    audit_cmd->add_flag("--replay", config.replay, "compute rates from externally supplied counters");
    audit_cmd->add_option("--n-files", config.n_files, "replay: files discovered")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--n-skipped", config.n_skipped, "replay: files skipped")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--chunks-baseline", config.chunks_baseline, "replay: baseline chunks")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--chunks-approach", config.chunks_approach, "replay: approach chunks")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--nodes-reference", config.nodes_reference, "replay: reference nodes")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--nodes-approach", config.nodes_approach, "replay: approach nodes")
        ->check(CLI::NonNegativeNumber);
    add_out(audit_cmd);

    auto* bench_cmd = app.add_subcommand("bench", "run a question suite and write the artifact");
    add_root(bench_cmd);
    add_chunking(bench_cmd);
    add_retrieval(bench_cmd);
    bench_cmd->add_option("--suite", config.suite, "question suite JSON file")->required();
    bench_cmd->add_option("--approach", config.approach, "pipeline to run")
        ->required()
        ->check(CLI::IsMember({"nograph", "dkb"}));
    bench_cmd->add_option("--label", config.label, "repository label for the artifact");
    bench_cmd->add_option("--generator", config.generator,
                          "external answer command reading the prompt on stdin");
    add_out(bench_cmd);
    add_real_timing(bench_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (index_cmd->parsed()) {
            return cmd_index(config);
        }
        if (graph_cmd->parsed()) {
            return cmd_graph(config);
        }
        if (query_cmd->parsed()) {
            return cmd_query(config);
        }
        if (audit_cmd->parsed()) {
            return cmd_audit(config);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(config);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
