#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetakit {

/// Syntax or semantic error in catalogue, registry or radical text. Line and
/// column are 1-based.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message), line_(line), column_(column)
    {
    }

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace thetakit
