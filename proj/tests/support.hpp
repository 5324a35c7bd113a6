#pragma once

// Shared fixtures and process helpers for the test binaries.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

inline std::filesystem::path test_dir() { return std::filesystem::path(CODEGRAPH_TEST_DIR); }

inline std::filesystem::path fixture_repo() { return test_dir() / "fixtures" / "fixture_repo"; }

inline std::filesystem::path fixture_suite() { return test_dir() / "fixtures" / "fixture_suite.json"; }

inline std::filesystem::path golden_path(const std::string& name) {
    return test_dir() / "golden" / name;
}

inline std::filesystem::path prompt_dir() { return test_dir().parent_path() / "data" / "prompts"; }

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("test support: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("test support: cannot write " + path.string());
    out << content;
}

/// Self-deleting unique directory under the system temp root.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "codegraph_test_XXXXXX").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        if (mkdtemp(buf.data()) == nullptr) {
            throw std::runtime_error("test support: mkdtemp failed");
        }
        path.assign(buf.data());
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

inline std::string cli_bin() {
    const char* bin = std::getenv("CODEGRAPH_BIN");
    if (bin == nullptr) return {};
    // absolute so run_cli keeps working after it changes directory
    return std::filesystem::absolute(bin).string();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted.push_back(c);
        }
    }
    quoted.push_back('\'');
    return quoted;
}

/// Runs the CLI with `args`, capturing stdout, stderr, and the exit code.
/// `cwd` is prepended as a `cd` when given.
inline CliResult run_cli(const std::vector<std::string>& args, const std::string& cwd = {}) {
    const std::string bin = cli_bin();
    if (bin.empty()) throw std::runtime_error("test support: CODEGRAPH_BIN is not set");
    TempDir scratch;
    const auto out_file = scratch.path / "stdout";
    const auto err_file = scratch.path / "stderr";
    std::string command;
    if (!cwd.empty()) command += "cd " + shell_quote(cwd) + " && ";
    command += shell_quote(bin);
    for (const auto& arg : args) command += " " + shell_quote(arg);
    command += " > " + shell_quote(out_file.string()) + " 2> " + shell_quote(err_file.string());
    const int status = std::system(command.c_str());
    CliResult result;
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

/// Deterministic text generator mixing code-like runs, spaces, newlines,
/// blank lines, and multibyte characters. `max_bytes` bounds the size only
/// approximately (the last atom may overshoot).
inline std::string random_text(std::mt19937& rng, std::size_t max_bytes) {
    static const std::vector<std::string> atoms = {
        "alpha", "Beta",  "gamma_1", "return", "void",  "int",  "21",   "x",
        "y;",    "f(x)",  "{",       "}",      "caf\xC3\xA9", "\xE2\x82\xAC", "na\xC3\xAFve", "Zz"};
    std::uniform_int_distribution<std::size_t> len_dist(0, max_bytes);
    std::uniform_int_distribution<std::size_t> atom_dist(0, atoms.size() - 1);
    std::uniform_int_distribution<int> sep_dist(0, 9);
    const std::size_t target = len_dist(rng);
    std::string out;
    while (out.size() < target) {
        out += atoms[atom_dist(rng)];
        switch (sep_dist(rng)) {
            case 0:
            case 1:
            case 2:
            case 3: out.push_back(' '); break;
            case 4:
            case 5: out.push_back('\n'); break;
            case 6: out += "\n\n"; break;
            default: break;
        }
    }
    return out;
}

} // namespace testsupport
