#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "codegraph/chunk_index.hpp"
#include "codegraph/entities.hpp"

namespace codegraph {

struct ExpansionConfig {
    int depth = 1;                  // hop bound of the bidirectional expansion
    bool interface_expansion = true;
    /// Default applies the interface-consumer rule to seeds only; enabling
    /// this re-applies it at every hop of the expansion.
    bool interface_expansion_at_all_depths = false;
    int seed_excerpt_chars = 1200;
    int neighbor_excerpt_chars = 800;
    int max_neighbors_per_seed = 8;
};

/// A retrieval hit mapped to its candidate entity name (file base name minus
/// the .java suffix), deduplicated by first-seen order.
struct SeedCandidate {
    std::string name;
    std::size_t hit_index = 0; // first hit that produced this candidate
    bool in_graph = false;
};

std::vector<SeedCandidate> seed_candidates(const std::vector<RetrievalHit>& hits,
                                           const OntologyGraph& graph);

/// Candidate names that are graph nodes, first-seen order (the seed set V0).
std::vector<std::string> entities_from_hits(const std::vector<RetrievalHit>& hits,
                                            const OntologyGraph& graph);

struct InterfaceExpansion {
    /// Predecessors of each interface the entity implements, interface by
    /// interface (name asc), names ascending within a group, deduplicated,
    /// the entity itself excluded.
    std::vector<std::string> consumers;
    /// One "... implements I. Checking consumers of I..." note per interface.
    std::vector<std::string> notes;
};

InterfaceExpansion interface_consumer_expand(const OntologyGraph& graph, const std::string& entity);

/// Bidirectional depth-bounded expansion: seeds plus every node reachable
/// within config.depth hops over successor and predecessor edges, plus
/// interface consumers of the seeds when interface_expansion is on (of every
/// frontier when interface_expansion_at_all_depths is also on). Order:
/// seeds first (input order), then discoveries level by level, neighbors of
/// one node merged name-ascending; first sighting wins. Seeds that are not
/// graph nodes are ignored.
std::vector<std::string> expand(const OntologyGraph& graph, const std::vector<std::string>& seeds,
                                const ExpansionConfig& config);

} // namespace codegraph
