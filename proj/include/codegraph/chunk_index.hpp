#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codegraph/chunker.hpp"

namespace codegraph {

/// Immutable chunk corpus plus the term statistics backing the lexical
/// scorer. Chunk ids are positions in build order (file order, then offset).
struct ChunkIndex {
    std::vector<CodeChunk> chunks;
    std::vector<std::map<std::string, int>> term_counts; // per chunk, token -> count
    std::vector<double> norms;                           // per chunk, tf-idf vector norm
    std::map<std::string, int> doc_freq;                 // token -> chunks containing it
    std::vector<std::pair<std::string, int>> per_file;   // path -> chunk count, file order
    double build_seconds = 0.0;
    std::vector<std::string> warnings;

    std::size_t total_chunks() const { return chunks.size(); }
};

/// Chunks every included file under `root`. `files` must be repository-
/// relative paths as produced by scan_repository; `include_filter`, when
/// present, keeps only listed paths (an empty set keeps nothing). Unreadable
/// files are excluded with a warning.
ChunkIndex build_index(const std::string& root, const std::vector<std::string>& files,
                       const std::optional<std::set<std::string>>& include_filter = std::nullopt,
                       std::size_t chunk_size = 1000, std::size_t chunk_overlap = 100);

struct RetrievalHit {
    CodeChunk chunk;
    double score = 0.0;
};

/// Ranking interface; the bundled scorer is tf-idf cosine, other back-ends
/// can slot in behind the same contract.
class Retriever {
public:
    virtual ~Retriever() = default;
    virtual std::vector<RetrievalHit> retrieve(const std::string& query, int k) const = 0;
};

/// Deterministic tf-idf cosine over lowercase [a-z0-9_] tokens:
/// tf = raw count, idf = ln((1 + N) / (1 + df)) + 1, accumulation in token
/// order so scores are identical across platforms. Only chunks with positive
/// score are returned, ordered by (score desc, path asc, offset asc).
class TfIdfRetriever : public Retriever {
public:
    explicit TfIdfRetriever(const ChunkIndex& index) : index_(index) {}
    std::vector<RetrievalHit> retrieve(const std::string& query, int k) const override;

private:
    const ChunkIndex& index_;
};

/// Convenience wrapper over TfIdfRetriever. Throws std::invalid_argument for
/// k < 1.
std::vector<RetrievalHit> retrieve(const ChunkIndex& index, const std::string& query, int k = 10);

/// {total_chunks, per_file:[{path, chunks}], build_seconds}
nlohmann::ordered_json index_manifest(const ChunkIndex& index, double build_seconds);

} // namespace codegraph
