#pragma once

#include <stdexcept>
#include <string>

namespace codegraph {

/// Unrecoverable configuration or input error. CLI maps these to exit code 1.
class FatalError : public std::runtime_error {
public:
    explicit FatalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace codegraph
