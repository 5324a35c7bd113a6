#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codegraph/chunk_index.hpp"
#include "codegraph/entities.hpp"
#include "codegraph/expansion.hpp"

namespace codegraph {

struct Excerpt {
    std::string entity;
    std::string path;
    std::string text;
};

struct ContextBundle {
    std::vector<std::string> ontology_notes;
    std::vector<Excerpt> excerpts;
    /// Candidates in hit order, then expansion discoveries in expansion
    /// order; superset of every excerpt's entity.
    std::vector<std::string> included_entities;
};

/// Assembles the retrieval context for one query. For each candidate derived
/// from `hits` (in hit order, deduplicated): interface-consumer notes, a
/// relationship summary over the graph, an excerpt of the first hit chunk
/// (seed_excerpt_chars), then up to max_neighbors_per_seed prefix excerpts of
/// direct-neighbor files (neighbor_excerpt_chars, names ascending, neighbors
/// limited to v_d, each entity excerpted at most once across the bundle).
/// Candidates without a graph node contribute their excerpt only. `root`
/// locates neighbor files named by the graph's file map; an unreadable
/// neighbor yields a note instead of an excerpt.
ContextBundle assemble_context(const OntologyGraph& graph, const std::vector<std::string>& v_d,
                               const std::vector<std::string>& seeds,
                               const std::vector<RetrievalHit>& hits, const ExpansionConfig& config,
                               const std::string& root);

/// Notes and excerpts as prompt text: each "[ONTOLOGY INFO]" line is preceded
/// by a blank line; excerpts follow as "--- FILE: path (entity) ---" blocks.
std::string render_context_text(const ContextBundle& bundle);

/// {question, included_entities, ontology_notes, excerpts, elapsed_seconds}
nlohmann::ordered_json bundle_to_json(const ContextBundle& bundle, const std::string& question,
                                      double elapsed_seconds);

} // namespace codegraph
