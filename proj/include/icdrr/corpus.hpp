#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "icdrr/icd_code.hpp"

namespace icdrr {

/// One code table row. Descriptions are stored verbatim; tokenization
/// handles case folding downstream.
struct IcdEntry {
    IcdCode code;
    std::string short_description;  ///< empty when the source has none
    std::string long_description;   ///< non-empty after trimming
    std::optional<bool> billable;   ///< populated by the order-file parser
};

/// Per-row problem recorded while parsing. Collected, not fatal, until
/// more than 10% of data rows are affected.
struct MalformedRow {
    std::size_t line_no = 0;
    std::string reason;
};

/// Parse-time bookkeeping attached to the resulting table.
struct ParseReport {
    std::size_t data_rows = 0;        ///< rows seen after the header
    std::size_t duplicate_count = 0;  ///< rows dropped by the keep-first rule
    std::vector<MalformedRow> malformed;
};

/// The indexed corpus of ICD-10-CM entries. Immutable after construction;
/// safe for unlimited concurrent readers. Codes are unique by normalized
/// form and lookup is total over the stored entries.
class CodeTable {
public:
    CodeTable(std::vector<IcdEntry> entries, std::uint64_t source_digest,
              ParseReport report);

    const std::vector<IcdEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Entry with the given normalized code, or nullptr.
    const IcdEntry* find(std::string_view normalized) const;

    std::uint64_t source_digest() const { return source_digest_; }
    std::chrono::system_clock::time_point build_timestamp() const {
        return build_timestamp_;
    }
    const ParseReport& report() const { return report_; }

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<IcdEntry> entries_;
    std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>>
        by_code_;
    std::uint64_t source_digest_ = 0;
    std::chrono::system_clock::time_point build_timestamp_;
    ParseReport report_;
};

/// Parses the `code,description` CSV schema (RFC-4180, UTF-8, header
/// matched case-insensitively, extra columns ignored). Duplicate normalized
/// codes collapse to the first occurrence and are counted in the report.
/// Throws CorpusRejected when >10% of data rows are malformed, EmptyCorpus
/// when no valid rows remain.
CodeTable parse_csv(std::string_view bytes);

/// Parses the CDC order-file fixed-width layout. 1-based columns:
/// order number 1-5, code 7-13 (space padded), billable flag 14-15
/// ('0'/'1'), short description 17-77, long description 78 to end of line.
/// Error policy matches parse_csv.
CodeTable parse_order_file(std::string_view bytes);

/// Reads the whole file and dispatches on `format` ("csv" or "order").
CodeTable load_corpus(const std::filesystem::path& path,
                      std::string_view format = "csv");

/// Writes the table back out in the CSV schema; parse_csv of the output
/// reproduces the same entries.
void write_corpus_csv(const CodeTable& table, std::ostream& out);

}  // namespace icdrr
