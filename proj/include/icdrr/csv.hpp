#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace icdrr::csv {

/// One parsed record plus the 1-based line number its first byte sits on.
struct Row {
    std::vector<std::string> fields;
    std::size_t line_no = 0;
};

/// RFC-4180 reader over an in-memory document. Handles quoted fields,
/// embedded separators/quotes/newlines and both LF and CRLF line endings.
/// An unterminated quote at end of input closes the field.
std::vector<Row> parse(std::string_view text);

/// Quotes a field iff it contains a separator, quote or newline.
std::string escape_field(std::string_view field);

/// Joins fields into one RFC-4180 line (no trailing newline).
std::string format_row(const std::vector<std::string>& fields);

}  // namespace icdrr::csv
