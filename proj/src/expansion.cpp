#include "codegraph/expansion.hpp"

#include <set>

namespace codegraph {

static std::string candidate_name(const std::string& source_path) {
    std::size_t slash = source_path.find_last_of('/');
    std::string base = slash == std::string::npos ? source_path : source_path.substr(slash + 1);
    const std::string suffix = ".java";
    if (base.size() >= suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
        base.resize(base.size() - suffix.size());
    }
    return base;
}

std::vector<SeedCandidate> seed_candidates(const std::vector<RetrievalHit>& hits,
                                           const OntologyGraph& graph) {
    std::vector<SeedCandidate> candidates;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        std::string name = candidate_name(hits[i].chunk.source_path);
        if (name.empty() || !seen.insert(name).second) continue;
        candidates.push_back(SeedCandidate{name, i, graph.has_node(name)});
    }
    return candidates;
}

std::vector<std::string> entities_from_hits(const std::vector<RetrievalHit>& hits,
                                            const OntologyGraph& graph) {
    std::vector<std::string> seeds;
    for (const auto& candidate : seed_candidates(hits, graph)) {
        if (candidate.in_graph) seeds.push_back(candidate.name);
    }
    return seeds;
}

InterfaceExpansion interface_consumer_expand(const OntologyGraph& graph, const std::string& entity) {
    InterfaceExpansion out;
    std::set<std::string> seen;
    for (const auto& succ : graph.successors(entity)) {
        if (succ.relation != Relation::Implements) continue;
        out.notes.push_back("[ONTOLOGY INFO]: " + entity + " implements " + succ.name +
                            ". Checking consumers of " + succ.name + "...");
        for (const auto& pred : graph.predecessors(succ.name)) {
            if (pred.name == entity) continue;
            if (seen.insert(pred.name).second) out.consumers.push_back(pred.name);
        }
    }
    return out;
}

std::vector<std::string> expand(const OntologyGraph& graph, const std::vector<std::string>& seeds,
                                const ExpansionConfig& config) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    for (const auto& seed : seeds) {
        if (graph.has_node(seed) && seen.insert(seed).second) order.push_back(seed);
    }
    std::vector<std::string> frontier = order;
    for (int level = 1; level <= config.depth && !frontier.empty(); ++level) {
        std::vector<std::string> next;
        for (const auto& node : frontier) {
            std::set<std::string> local;
            for (const auto& succ : graph.successors(node)) local.insert(succ.name);
            for (const auto& pred : graph.predecessors(node)) local.insert(pred.name);
            bool apply_interface = config.interface_expansion &&
                                   (level == 1 || config.interface_expansion_at_all_depths);
            if (apply_interface) {
                for (const auto& consumer : interface_consumer_expand(graph, node).consumers) {
                    local.insert(consumer);
                }
            }
            for (const auto& name : local) {
                if (seen.insert(name).second) {
                    order.push_back(name);
                    next.push_back(name);
                }
            }
        }
        frontier = std::move(next);
    }
    return order;
}

} // namespace codegraph
