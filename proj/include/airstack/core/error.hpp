#pragma once

#include <stdexcept>
#include <string>

namespace airstack::core {

/// Exception carrying a stable machine-readable code alongside the human message.
/// Codes are short PascalCase identifiers such as "StaleTimestamp" or "OutOfRange".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace airstack::core
