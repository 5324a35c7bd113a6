#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace codegraph {

/// Byte offsets at which characters start. Every byte that is not a UTF-8
/// continuation byte opens a character, so each invalid byte counts as one
/// character and offsets stay monotonic for arbitrary input. Byte 0 always
/// opens the first character, anchoring stray leading continuation bytes so
/// no byte falls outside every character.
std::vector<std::size_t> utf8_char_starts(std::string_view text);

/// Number of characters in `text` under the same tolerant decoding.
std::size_t utf8_length(std::string_view text);

/// Longest prefix of `text` holding at most `max_chars` characters.
std::string utf8_truncate(std::string_view text, std::size_t max_chars);

/// Lowercased maximal runs of [a-z0-9_]. Any other byte separates tokens.
std::vector<std::string> lexical_tokens(std::string_view text);

/// Round half-up to three decimals: floor(x * 1000 + 0.5) / 1000.
double round_half_up3(double x);

std::string read_file(const std::string& path);
bool try_read_file(const std::string& path, std::string& out);

} // namespace codegraph
