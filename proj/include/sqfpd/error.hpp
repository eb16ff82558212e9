#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sqfpd {

/// Every domain failure raised by the library. `kind()` is a stable
/// machine-readable tag (used by the CLI's structured error output).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Text input that could not be parsed; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::string kind, const std::string& message, std::size_t position)
        : Error(std::move(kind), message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace sqfpd
