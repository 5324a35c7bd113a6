#include "codegraph/chunk_index.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "codegraph/text.hpp"

namespace codegraph {

static std::map<std::string, int> count_tokens(std::string_view text) {
    std::map<std::string, int> counts;
    for (auto& token : lexical_tokens(text)) ++counts[token];
    return counts;
}

static double idf(int doc_count, int doc_freq) {
    return std::log((1.0 + doc_count) / (1.0 + doc_freq)) + 1.0;
}

ChunkIndex build_index(const std::string& root, const std::vector<std::string>& files,
                       const std::optional<std::set<std::string>>& include_filter,
                       std::size_t chunk_size, std::size_t chunk_overlap) {
    auto t0 = std::chrono::steady_clock::now();
    ChunkIndex index;
    for (const std::string& rel : files) {
        if (include_filter && !include_filter->count(rel)) continue;
        std::string text;
        if (!try_read_file((std::filesystem::path(root) / rel).string(), text)) {
            index.warnings.push_back("index: unreadable file excluded: " + rel);
            continue;
        }
        std::vector<CodeChunk> chunks = chunk_file(text, chunk_size, chunk_overlap);
        index.per_file.emplace_back(rel, static_cast<int>(chunks.size()));
        for (auto& chunk : chunks) {
            chunk.id = static_cast<int>(index.chunks.size());
            chunk.source_path = rel;
            index.chunks.push_back(std::move(chunk));
        }
    }
    index.term_counts.reserve(index.chunks.size());
    for (const auto& chunk : index.chunks) {
        auto counts = count_tokens(chunk.text);
        for (const auto& [token, _] : counts) ++index.doc_freq[token];
        index.term_counts.push_back(std::move(counts));
    }
    const int n = static_cast<int>(index.chunks.size());
    index.norms.reserve(index.chunks.size());
    for (const auto& counts : index.term_counts) {
        double sum = 0.0;
        for (const auto& [token, tf] : counts) {
            double w = tf * idf(n, index.doc_freq.at(token));
            sum += w * w;
        }
        index.norms.push_back(std::sqrt(sum));
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    index.build_seconds = elapsed.count();
    return index;
}

std::vector<RetrievalHit> TfIdfRetriever::retrieve(const std::string& query, int k) const {
    std::vector<RetrievalHit> hits;
    if (index_.chunks.empty()) return hits;

    const int n = static_cast<int>(index_.chunks.size());
    std::map<std::string, int> query_counts = count_tokens(query);
    double query_norm_sq = 0.0;
    std::map<std::string, double> query_weights;
    for (const auto& [token, tf] : query_counts) {
        auto df_it = index_.doc_freq.find(token);
        double w = tf * idf(n, df_it == index_.doc_freq.end() ? 0 : df_it->second);
        query_weights.emplace(token, w);
        query_norm_sq += w * w;
    }
    const double query_norm = std::sqrt(query_norm_sq);
    if (query_norm == 0.0) return hits;

    for (std::size_t i = 0; i < index_.chunks.size(); ++i) {
        if (index_.norms[i] == 0.0) continue;
        const auto& counts = index_.term_counts[i];
        double dot = 0.0;
        for (const auto& [token, qw] : query_weights) {
            auto it = counts.find(token);
            if (it == counts.end()) continue;
            dot += qw * it->second * idf(n, index_.doc_freq.at(token));
        }
        if (dot <= 0.0) continue;
        RetrievalHit hit;
        hit.chunk = index_.chunks[i];
        hit.score = dot / (query_norm * index_.norms[i]);
        hits.push_back(std::move(hit));
    }
    std::stable_sort(hits.begin(), hits.end(), [](const RetrievalHit& a, const RetrievalHit& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.chunk.source_path != b.chunk.source_path) return a.chunk.source_path < b.chunk.source_path;
        return a.chunk.start_offset < b.chunk.start_offset;
    });
    if (static_cast<int>(hits.size()) > k) hits.resize(static_cast<std::size_t>(k));
    return hits;
}

std::vector<RetrievalHit> retrieve(const ChunkIndex& index, const std::string& query, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return TfIdfRetriever(index).retrieve(query, k);
}

nlohmann::ordered_json index_manifest(const ChunkIndex& index, double build_seconds) {
    nlohmann::ordered_json doc;
    doc["total_chunks"] = index.total_chunks();
    auto per_file = nlohmann::ordered_json::array();
    for (const auto& [path, chunks] : index.per_file) {
        per_file.push_back({{"path", path}, {"chunks", chunks}});
    }
    doc["per_file"] = std::move(per_file);
    doc["build_seconds"] = build_seconds;
    return doc;
}

} // namespace codegraph
