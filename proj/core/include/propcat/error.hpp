#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propcat {

// Thrown when an operation is handed structurally invalid data: size
// mismatches, out-of-range targets, non-composable endpoints, malformed
// monoid tables. These are caller errors, never recoverable states.
struct StructureError : std::logic_error {
    explicit StructureError(const std::string& what) : std::logic_error(what) {}
};

// Thrown by the text parsers. The message already embeds the position;
// the fields are kept for programmatic use (both 1-based).
struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;

    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : std::runtime_error(what + " at line " + std::to_string(line_) +
                             ", column " + std::to_string(column_)),
          line(line_),
          column(column_) {}
};

}  // namespace propcat
