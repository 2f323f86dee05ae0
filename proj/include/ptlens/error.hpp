#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ptlens {

// Library-wide exception carrying a machine-readable code alongside the
// human-readable message. The CLI maps `code` into its error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace ptlens
