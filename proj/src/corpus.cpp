#include "icdrr/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "icdrr/csv.hpp"
#include "icdrr/errors.hpp"
#include "icdrr/hash.hpp"

namespace icdrr {

namespace {

std::string trim_copy(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

std::string lower_copy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

/// Applies the keep-first duplicate rule and the malformed-fraction gate,
/// then seals the table.
CodeTable finalize(std::vector<std::pair<IcdEntry, std::size_t>> candidates,
                   std::uint64_t digest, ParseReport report) {
    if (report.data_rows > 0 &&
        report.malformed.size() * 10 > report.data_rows) {
        throw CorpusRejected(report.malformed.size(), report.data_rows);
    }

    std::vector<IcdEntry> entries;
    entries.reserve(candidates.size());
    std::unordered_set<std::string> seen;
    for (auto& [entry, line] : candidates) {
        if (!seen.insert(entry.code.normalized).second) {
            ++report.duplicate_count;
            continue;
        }
        entries.push_back(std::move(entry));
    }
    if (entries.empty()) throw EmptyCorpus();
    return CodeTable(std::move(entries), digest, std::move(report));
}

}  // namespace

CodeTable::CodeTable(std::vector<IcdEntry> entries, std::uint64_t source_digest,
                     ParseReport report)
    : entries_(std::move(entries)),
      source_digest_(source_digest),
      build_timestamp_(std::chrono::system_clock::now()),
      report_(std::move(report)) {
    by_code_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto [it, inserted] =
            by_code_.emplace(entries_[i].code.normalized, i);
        if (!inserted)
            throw Error("duplicate normalized code in CodeTable: " +
                        entries_[i].code.normalized);
    }
}

const IcdEntry* CodeTable::find(std::string_view normalized) const {
    auto it = by_code_.find(normalized);
    if (it == by_code_.end()) return nullptr;
    return &entries_[it->second];
}

CodeTable parse_csv(std::string_view bytes) {
    auto rows = csv::parse(bytes);
    if (rows.empty()) throw EmptyCorpus();

    // Locate columns by case-insensitive header name; extras are ignored.
    const auto& header = rows.front().fields;
    std::size_t code_col = header.size(), desc_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string name = lower_copy(trim_copy(header[i]));
        if (name == "code" && code_col == header.size()) code_col = i;
        if (name == "description" && desc_col == header.size()) desc_col = i;
    }
    if (code_col == header.size() || desc_col == header.size())
        throw Error("csv header must name 'code' and 'description' columns");

    ParseReport report;
    std::vector<std::pair<IcdEntry, std::size_t>> candidates;
    candidates.reserve(rows.size());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        ++report.data_rows;
        if (row.fields.size() <= std::max(code_col, desc_col)) {
            report.malformed.push_back({row.line_no, "too few columns"});
            continue;
        }
        std::string description = trim_copy(row.fields[desc_col]);
        if (description.empty()) {
            report.malformed.push_back({row.line_no, "empty description"});
            continue;
        }
        try {
            IcdEntry entry;
            entry.code = normalize_code(row.fields[code_col]);
            entry.long_description = std::move(description);
            candidates.emplace_back(std::move(entry), row.line_no);
        } catch (const MalformedCode&) {
            report.malformed.push_back(
                {row.line_no, "malformed code '" + row.fields[code_col] + "'"});
        }
    }

    return finalize(std::move(candidates), fnv1a64(bytes), std::move(report));
}

CodeTable parse_order_file(std::string_view bytes) {
    // Column slices below are 0-based [offset, length) views of the 1-based
    // layout documented in the header.
    constexpr std::size_t kCodeOff = 6, kCodeLen = 7;
    constexpr std::size_t kFlagOff = 13, kFlagLen = 2;
    constexpr std::size_t kShortOff = 16, kShortLen = 61;
    constexpr std::size_t kLongOff = 77;

    ParseReport report;
    std::vector<std::pair<IcdEntry, std::size_t>> candidates;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= bytes.size() && pos != std::string_view::npos &&
           pos < bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? bytes.substr(pos)
                                    : bytes.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? bytes.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim_copy(line).empty()) continue;

        ++report.data_rows;
        if (line.size() <= kLongOff) {
            report.malformed.push_back({line_no, "line too short"});
            continue;
        }
        std::string code_field =
            trim_copy(line.substr(kCodeOff, kCodeLen));
        if (code_field.empty()) {
            report.malformed.push_back({line_no, "blank code field"});
            continue;
        }
        std::string flag_field =
            trim_copy(line.substr(kFlagOff, kFlagLen));
        if (flag_field != "0" && flag_field != "1") {
            report.malformed.push_back(
                {line_no, "billable flag must be '0' or '1'"});
            continue;
        }
        std::string long_desc = trim_copy(line.substr(kLongOff));
        if (long_desc.empty()) {
            report.malformed.push_back({line_no, "empty long description"});
            continue;
        }
        try {
            IcdEntry entry;
            entry.code = normalize_code(code_field);
            entry.short_description =
                trim_copy(line.substr(kShortOff, kShortLen));
            entry.long_description = std::move(long_desc);
            entry.billable = (flag_field == "1");
            candidates.emplace_back(std::move(entry), line_no);
        } catch (const MalformedCode&) {
            report.malformed.push_back(
                {line_no, "malformed code '" + code_field + "'"});
        }
    }

    return finalize(std::move(candidates), fnv1a64(bytes), std::move(report));
}

CodeTable load_corpus(const std::filesystem::path& path,
                      std::string_view format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = std::move(buf).str();
    if (format == "csv") return parse_csv(bytes);
    if (format == "order") return parse_order_file(bytes);
    throw InvalidConfig("unknown corpus format: " + std::string(format));
}

void write_corpus_csv(const CodeTable& table, std::ostream& out) {
    out << "code,description\n";
    for (const auto& entry : table.entries()) {
        out << csv::format_row(
                   {entry.code.normalized, entry.long_description})
            << "\n";
    }
}

}  // namespace icdrr
