#include "codegraph/chunker.hpp"

#include <algorithm>
#include <stdexcept>

#include "codegraph/text.hpp"

namespace codegraph {

std::vector<CodeChunk> chunk_file(std::string_view text, std::size_t chunk_size,
                                  std::size_t chunk_overlap) {
    if (chunk_size == 0 || chunk_overlap >= chunk_size) {
        throw std::invalid_argument("chunk_size must exceed chunk_overlap");
    }
    std::vector<CodeChunk> chunks;
    if (text.empty()) return chunks;

    const std::vector<std::size_t> starts = utf8_char_starts(text);
    const std::size_t n = starts.size();
    auto byte_at = [&](std::size_t char_idx) {
        return char_idx < n ? starts[char_idx] : text.size();
    };
    auto ch = [&](std::size_t char_idx) { return text[starts[char_idx]]; };

    const std::size_t stride = chunk_size - chunk_overlap;
    std::size_t start = 0;
    int id = 0;
    while (start < n) {
        std::size_t window_end = std::min(start + chunk_size, n);
        std::size_t cut = window_end;
        if (window_end < n) {
            const std::size_t min_cut = start + stride; // keep every chunk at least one stride long
            auto last_cut = [&](auto&& pred, std::size_t sep_len) -> std::size_t {
                for (std::size_t end = window_end; end >= min_cut && end >= sep_len; --end) {
                    if (pred(end - sep_len)) return end;
                }
                return 0;
            };
            std::size_t found =
                last_cut([&](std::size_t p) { return ch(p) == '\n' && ch(p + 1) == '\n'; }, 2);
            if (found == 0) found = last_cut([&](std::size_t p) { return ch(p) == '\n'; }, 1);
            if (found == 0) found = last_cut([&](std::size_t p) { return ch(p) == ' '; }, 1);
            if (found != 0) cut = found;
        }
        CodeChunk chunk;
        chunk.id = id++;
        chunk.start_offset = start;
        chunk.text.assign(text.substr(byte_at(start), byte_at(cut) - byte_at(start)));
        chunks.push_back(std::move(chunk));
        if (cut == n) break;
        const std::size_t backed = cut > chunk_overlap ? cut - chunk_overlap : 0;
        start = std::max(backed, start + 1);
    }
    return chunks;
}

} // namespace codegraph
