#include "icdrr/csv.hpp"

namespace icdrr::csv {

std::vector<Row> parse(std::string_view text) {
    std::vector<Row> rows;
    std::size_t line = 1;

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        Row row;
        row.line_no = line;
        bool row_done = false;
        while (!row_done) {
            std::string field;
            if (i < n && text[i] == '"') {
                ++i;  // opening quote
                while (i < n) {
                    char c = text[i];
                    if (c == '"') {
                        if (i + 1 < n && text[i + 1] == '"') {
                            field.push_back('"');
                            i += 2;
                        } else {
                            ++i;  // closing quote
                            break;
                        }
                    } else {
                        if (c == '\n') ++line;
                        field.push_back(c);
                        ++i;
                    }
                }
            } else {
                while (i < n && text[i] != ',' && text[i] != '\n' &&
                       text[i] != '\r') {
                    field.push_back(text[i]);
                    ++i;
                }
            }
            row.fields.push_back(std::move(field));

            if (i >= n) {
                row_done = true;
            } else if (text[i] == ',') {
                ++i;
            } else if (text[i] == '\r') {
                ++i;
                if (i < n && text[i] == '\n') ++i;
                ++line;
                row_done = true;
            } else if (text[i] == '\n') {
                ++i;
                ++line;
                row_done = true;
            }
        }
        // A lone trailing newline does not produce an empty record.
        if (row.fields.size() == 1 && row.fields[0].empty() && i >= n) break;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string escape_field(std::string_view field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quote) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape_field(fields[i]);
    }
    return out;
}

}  // namespace icdrr::csv
