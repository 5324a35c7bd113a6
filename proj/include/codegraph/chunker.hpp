#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace codegraph {

struct CodeChunk {
    int id = 0;                   // position within the index build order
    std::string source_path;      // repository-relative
    std::size_t start_offset = 0; // characters (Unicode scalar values)
    std::string text;
};

/// Splits `text` into windows of at most `chunk_size` characters with at most
/// `chunk_overlap` characters shared between consecutive chunks.
///
/// Each window [start, start + chunk_size] is cut at the last separator whose
/// end falls at least chunk_size - chunk_overlap characters past start,
/// trying blank line, then newline, then space; with no separator in reach
/// the cut is the full window (hard stride). The next chunk starts overlap
/// characters before the cut. The separator stays with the leading chunk.
/// Offsets and sizes count Unicode scalar values; every byte that is not a
/// UTF-8 continuation byte counts as one character.
///
/// Throws std::invalid_argument unless chunk_size > chunk_overlap >= 0.
std::vector<CodeChunk> chunk_file(std::string_view text, std::size_t chunk_size = 1000,
                                  std::size_t chunk_overlap = 100);

} // namespace codegraph
