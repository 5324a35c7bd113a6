#include "codegraph/context.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "codegraph/text.hpp"

namespace codegraph {

ContextBundle assemble_context(const OntologyGraph& graph, const std::vector<std::string>& v_d,
                               const std::vector<std::string>& seeds,
                               const std::vector<RetrievalHit>& hits, const ExpansionConfig& config,
                               const std::string& root) {
    ContextBundle bundle;
    const std::vector<SeedCandidate> candidates = seed_candidates(hits, graph);
    const std::set<std::string> seed_set(seeds.begin(), seeds.end());
    const std::set<std::string> vd_set(v_d.begin(), v_d.end());

    std::set<std::string> included;
    for (const auto& candidate : candidates) {
        if (included.insert(candidate.name).second) bundle.included_entities.push_back(candidate.name);
    }
    for (const auto& name : v_d) {
        if (included.insert(name).second) bundle.included_entities.push_back(name);
    }

    // every candidate's own excerpt comes from its hit chunk, never from a
    // neighbor prefix, so reserve them all up front
    std::set<std::string> excerpted;
    for (const auto& candidate : candidates) excerpted.insert(candidate.name);

    const bool interface_notes =
        config.interface_expansion && config.depth >= 1;

    for (const auto& candidate : candidates) {
        const bool graph_seed = candidate.in_graph && seed_set.count(candidate.name) != 0;
        InterfaceExpansion interfaces;
        if (graph_seed && interface_notes) {
            interfaces = interface_consumer_expand(graph, candidate.name);
            for (const auto& note : interfaces.notes) bundle.ontology_notes.push_back(note);
        }
        if (graph_seed) {
            bundle.ontology_notes.push_back("[ONTOLOGY INFO]: Relationships for " + candidate.name + ":");
            for (const auto& succ : graph.successors(candidate.name)) {
                bundle.ontology_notes.push_back("  - [INJECTS/USES] -> " + succ.name + " (" +
                                                to_string(succ.relation) + ")");
            }
            std::set<std::string> used_by;
            for (const auto& pred : graph.predecessors(candidate.name)) {
                used_by.insert(pred.name);
                bundle.ontology_notes.push_back("  - [USED BY] <- " + pred.name + " (" +
                                                to_string(pred.relation) + ")");
            }
            for (const auto& consumer : interfaces.consumers) {
                if (!used_by.insert(consumer).second) continue;
                auto direct = graph.relation(consumer, candidate.name);
                bundle.ontology_notes.push_back("  - [USED BY] <- " + consumer + " (" +
                                                (direct ? to_string(*direct) : "uses (via interface)") +
                                                ")");
            }
        }

        const CodeChunk& chunk = hits[candidate.hit_index].chunk;
        Excerpt seed_excerpt;
        seed_excerpt.entity = candidate.name;
        seed_excerpt.path = chunk.source_path;
        seed_excerpt.text = utf8_truncate(chunk.text, static_cast<std::size_t>(
                                                          std::max(config.seed_excerpt_chars, 0)));
        bundle.excerpts.push_back(std::move(seed_excerpt));

        if (!graph_seed) continue;

        std::set<std::string> neighbor_names;
        for (const auto& succ : graph.successors(candidate.name)) neighbor_names.insert(succ.name);
        for (const auto& pred : graph.predecessors(candidate.name)) neighbor_names.insert(pred.name);
        for (const auto& consumer : interfaces.consumers) neighbor_names.insert(consumer);

        int emitted = 0;
        for (const auto& neighbor : neighbor_names) {
            if (emitted >= config.max_neighbors_per_seed) break;
            if (neighbor == candidate.name || !vd_set.count(neighbor)) continue;
            if (excerpted.count(neighbor)) continue;
            auto path_it = graph.file_map().find(neighbor);
            if (path_it == graph.file_map().end()) continue;
            std::string source;
            if (!try_read_file((std::filesystem::path(root) / path_it->second).string(), source)) {
                bundle.ontology_notes.push_back("[ONTOLOGY INFO]: Source for " + neighbor +
                                                " unavailable (" + path_it->second + ")");
                continue;
            }
            Excerpt ex;
            ex.entity = neighbor;
            ex.path = path_it->second;
            ex.text = utf8_truncate(source, static_cast<std::size_t>(
                                                std::max(config.neighbor_excerpt_chars, 0)));
            bundle.excerpts.push_back(std::move(ex));
            excerpted.insert(neighbor);
            ++emitted;
        }
    }
    return bundle;
}

std::string render_context_text(const ContextBundle& bundle) {
    std::string out;
    for (const auto& note : bundle.ontology_notes) {
        if (note.rfind("[ONTOLOGY INFO]", 0) == 0) out.push_back('\n');
        out += note;
        out.push_back('\n');
    }
    for (const auto& excerpt : bundle.excerpts) {
        out += "\n--- FILE: " + excerpt.path + " (" + excerpt.entity + ") ---\n";
        out += excerpt.text;
        out.push_back('\n');
    }
    return out;
}

nlohmann::ordered_json bundle_to_json(const ContextBundle& bundle, const std::string& question,
                                      double elapsed_seconds) {
    nlohmann::ordered_json doc;
    doc["question"] = question;
    doc["included_entities"] = bundle.included_entities;
    doc["ontology_notes"] = bundle.ontology_notes;
    auto excerpts = nlohmann::ordered_json::array();
    for (const auto& excerpt : bundle.excerpts) {
        excerpts.push_back({{"entity", excerpt.entity}, {"path", excerpt.path}, {"text", excerpt.text}});
    }
    doc["excerpts"] = std::move(excerpts);
    doc["elapsed_seconds"] = elapsed_seconds;
    return doc;
}

} // namespace codegraph
