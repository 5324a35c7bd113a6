#include "codegraph/text.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "codegraph/errors.hpp"

namespace codegraph {

static bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

std::vector<std::size_t> utf8_char_starts(std::string_view text) {
    std::vector<std::size_t> starts;
    starts.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == 0 || !is_continuation(static_cast<unsigned char>(text[i]))) starts.push_back(i);
    }
    return starts;
}

std::size_t utf8_length(std::string_view text) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == 0 || !is_continuation(static_cast<unsigned char>(text[i]))) ++n;
    }
    return n;
}

std::string utf8_truncate(std::string_view text, std::size_t max_chars) {
    std::size_t n = 0;
    std::size_t i = 0;
    for (; i < text.size(); ++i) {
        if (i == 0 || !is_continuation(static_cast<unsigned char>(text[i]))) {
            if (n == max_chars) break;
            ++n;
        }
    }
    return std::string(text.substr(0, i));
}

std::vector<std::string> lexical_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char raw : text) {
        auto c = static_cast<unsigned char>(raw);
        bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (word) {
            current.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

double round_half_up3(double x) { return std::floor(x * 1000.0 + 0.5) / 1000.0; }

std::string read_file(const std::string& path) {
    std::string out;
    if (!try_read_file(path, out)) throw FatalError("cannot read file: " + path);
    return out;
}

bool try_read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return false;
    out = buf.str();
    return true;
}

} // namespace codegraph
