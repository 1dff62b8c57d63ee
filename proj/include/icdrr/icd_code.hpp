#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace icdrr {

/// An ICD-10-CM code in both the form it was read and its canonical form.
///
/// The canonical (normalized) form is uppercase, period-free, 3 to 7
/// characters: a letter in A-T or V-Z, a digit, then 1-5 alphanumerics.
/// The first three characters are the category.
struct IcdCode {
    std::string raw;         ///< as read; may carry the display period
    std::string normalized;  ///< canonical form

    std::string_view category() const {
        return std::string_view(normalized).substr(0, 3);
    }

    friend bool operator==(const IcdCode& a, const IcdCode& b) {
        return a.normalized == b.normalized;
    }
    friend auto operator<=>(const IcdCode& a, const IcdCode& b) {
        return a.normalized <=> b.normalized;
    }
};

/// True iff `s` is a structurally valid normalized code.
bool is_valid_normalized_code(std::string_view s);

/// Trims, strips periods and uppercases `raw`, then validates the result.
/// Idempotent on its own output. Throws MalformedCode on failure.
IcdCode normalize_code(std::string_view raw);

/// First three characters of the normalized form.
std::string_view category_of(const IcdCode& code);

/// Scans free text for the first structurally valid code, normalizing each
/// candidate word as it goes. Returns nullopt when nothing matches.
std::optional<IcdCode> scan_first_valid_code(std::string_view text);

}  // namespace icdrr
