#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocedforge {

enum class Severity { Warning, Error };

/// A non-fatal finding produced while parsing or converting input.
struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string message;
    std::string source;          // file name or stream label, may be empty
    std::size_t line = 0;        // 1-based, 0 when unknown
    std::size_t column = 0;

    std::string render() const;
};

/// Fatal input error. Carries a location when one is known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0, std::size_t column = 0,
               std::string source = {})
        : std::runtime_error(format(message, line, column, source)),
          message_(std::move(message)),
          source_(std::move(source)),
          line_(line),
          column_(column) {}

    const std::string& message() const { return message_; }
    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line,
                              std::size_t column, const std::string& source);

    std::string message_;
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ocedforge
