#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tan {

// Runtime failure with a stable machine-readable kind. The CLI maps these to
// JSON error objects on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
    throw Error(std::move(kind), message);
}

} // namespace tan
