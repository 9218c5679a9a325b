#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace logfold {

/// One decoded UTF-8 unit. Invalid sequences yield a single raw byte with
/// valid == false, which downstream code treats as a delimiter.
struct Utf8Char {
    std::uint32_t cp = 0;
    unsigned len = 1;
    bool valid = false;
};

Utf8Char decode_utf8(std::string_view s, std::size_t pos);

/// Letter or digit per the common Unicode letter/number blocks (ASCII exact;
/// non-ASCII covered by block ranges for the major scripts).
bool is_alnum_codepoint(std::uint32_t cp);

inline bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
}

inline bool is_ascii_digit(unsigned char c) {
    return c >= '0' && c <= '9';
}

bool all_ascii_digits(std::string_view token);

/// True iff the token mixes at least one alphanumeric character with at least
/// one non-alphanumeric character (the structured-token content test).
bool has_mixed_content(std::string_view token);

bool has_any_alnum(std::string_view token);

}  // namespace logfold
