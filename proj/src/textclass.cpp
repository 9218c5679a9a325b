#include "logfold/textclass.hpp"

#include <algorithm>
#include <array>

namespace logfold {

Utf8Char decode_utf8(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1, true};

    unsigned len = 0;
    std::uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return {b0, 1, false};
    }
    if (pos + len > s.size()) return {b0, 1, false};
    for (unsigned i = 1; i < len; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) return {b0, 1, false};
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms and surrogates.
    static constexpr std::uint32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
        return {b0, 1, false};
    return {cp, len, true};
}

namespace {

struct Range {
    std::uint32_t lo, hi;
};

// Letter and number blocks for the scripts that show up in real-world logs.
// ASCII is handled before the table is consulted.
constexpr std::array<Range, 32> kAlnumRanges{{
    {0x00AA, 0x00AA}, {0x00B5, 0x00B5}, {0x00BA, 0x00BA},
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x024F},
    {0x0250, 0x02C1},
    {0x0386, 0x0386}, {0x0388, 0x03F5},
    {0x0400, 0x0481}, {0x048A, 0x052F},
    {0x05D0, 0x05EA},
    {0x0621, 0x064A}, {0x0660, 0x0669}, {0x0671, 0x06D3},
    {0x0904, 0x0939}, {0x0966, 0x096F},
    {0x0E01, 0x0E30}, {0x0E50, 0x0E59},
    {0x1100, 0x11FF},
    {0x1E00, 0x1FBC},
    {0x3041, 0x3096}, {0x30A1, 0x30FA},
    {0x3400, 0x4DBF}, {0x4E00, 0x9FFF},
    {0xAC00, 0xD7A3},
    {0xF900, 0xFA6D},
    {0xFF10, 0xFF19}, {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A},
    {0x10000, 0x1000F},  // placeholder slot, never matched first
    {0x1D400, 0x1D7FF},
}};

}  // namespace

bool is_alnum_codepoint(std::uint32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= 'a' && cp <= 'z');
    }
    for (const auto& r : kAlnumRanges) {
        if (cp >= r.lo && cp <= r.hi) return true;
    }
    return false;
}

bool all_ascii_digits(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(),
                       [](char c) { return is_ascii_digit(static_cast<unsigned char>(c)); });
}

bool has_mixed_content(std::string_view token) {
    bool alnum = false, other = false;
    std::size_t i = 0;
    while (i < token.size()) {
        const Utf8Char u = decode_utf8(token, i);
        if (u.valid && is_alnum_codepoint(u.cp))
            alnum = true;
        else
            other = true;
        if (alnum && other) return true;
        i += u.len;
    }
    return false;
}

bool has_any_alnum(std::string_view token) {
    std::size_t i = 0;
    while (i < token.size()) {
        const Utf8Char u = decode_utf8(token, i);
        if (u.valid && is_alnum_codepoint(u.cp)) return true;
        i += u.len;
    }
    return false;
}

}  // namespace logfold
