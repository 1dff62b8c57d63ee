#include "icdrr/icd_code.hpp"

#include <cctype>

#include "icdrr/errors.hpp"

namespace icdrr {

namespace {

bool is_upper_alnum(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

bool is_valid_normalized_code(std::string_view s) {
    if (s.size() < 3 || s.size() > 7) return false;
    char first = s[0];
    // U is reserved and not part of the code space handled here.
    bool first_ok = (first >= 'A' && first <= 'T') || (first >= 'V' && first <= 'Z');
    if (!first_ok) return false;
    if (s[1] < '0' || s[1] > '9') return false;
    for (std::size_t i = 2; i < s.size(); ++i)
        if (!is_upper_alnum(s[i])) return false;
    return true;
}

IcdCode normalize_code(std::string_view raw) {
    std::string_view trimmed = trim(raw);
    if (trimmed.empty()) throw MalformedCode(std::string(raw));

    std::string normalized;
    normalized.reserve(trimmed.size());
    for (char c : trimmed) {
        if (c == '.') continue;
        normalized.push_back(
            static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (!is_valid_normalized_code(normalized))
        throw MalformedCode(std::string(raw));
    return IcdCode{std::string(trimmed), std::move(normalized)};
}

std::string_view category_of(const IcdCode& code) { return code.category(); }

std::optional<IcdCode> scan_first_valid_code(std::string_view text) {
    // Candidate words are maximal runs of [A-Za-z0-9.]; normalization drops
    // the periods, so dotted display forms and trailing sentence periods
    // both resolve to the same canonical code.
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto is_word_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '.';
    };
    while (i < n) {
        while (i < n && !is_word_char(text[i])) ++i;
        std::size_t start = i;
        while (i < n && is_word_char(text[i])) ++i;
        if (i == start) break;
        std::string_view word = text.substr(start, i - start);
        try {
            return normalize_code(word);
        } catch (const MalformedCode&) {
            // not a code; keep scanning
        }
    }
    return std::nullopt;
}

}  // namespace icdrr
