#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logfold {

// ---------------------------------------------------------------------------
// Elastic (base-128 varint) encoding. Little-endian 7-bit groups; every byte
// except the last carries MSB 1.
// ---------------------------------------------------------------------------

void elastic_encode(std::uint64_t n, std::string& out);
std::string elastic_encode(std::uint64_t n);

struct ElasticDecoded {
    std::uint64_t value = 0;
    std::size_t consumed = 0;
};

/// Throws MalformedVarint if no terminator appears within 10 bytes or the
/// stream ends mid-value.
ElasticDecoded elastic_decode(std::string_view bytes, std::size_t offset = 0);

/// Cursor for reading a stream of elastic values.
class ByteReader {
public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    std::uint64_t read_varint();
    std::uint8_t read_byte();
    std::string_view read_bytes(std::size_t n);
    bool at_end() const { return pos_ == data_.size(); }
    std::size_t pos() const { return pos_; }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Zigzag mapping for signed deltas.
// ---------------------------------------------------------------------------

inline std::uint64_t zigzag(std::int64_t n) {
    return (static_cast<std::uint64_t>(n) << 1) ^ static_cast<std::uint64_t>(n >> 63);
}

inline std::int64_t unzigzag(std::uint64_t z) {
    return static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
}

// ---------------------------------------------------------------------------
// Numeric column encoding.
//
// Stream layout (bit-exact):
//   elastic(count) || mode byte || [extras] || payload of elastic(zigzag(v))
// Mode byte: low 2 bits 0=Plain 1=Delta 2=Combined 3=RawStrings;
//   0x80 flags a fixed-width byte, 0x40 flags delta inside Combined.
// Combined extras: column-count byte followed by per-column width bytes.
// RawStrings payload: elastic(len) || bytes per entry (overflow fallback).
// ---------------------------------------------------------------------------

struct NumericColumnEncoding {
    enum class Mode : std::uint8_t { Plain = 0, Delta = 1 };
    Mode mode = Mode::Plain;
    bool use_zigzag = true;  // always set; kept explicit for the manifest
    std::optional<std::uint8_t> fixed_width;
};

/// Samples the first ten values; picks Delta iff the mean absolute value of
/// the delta form (base kept as-is) is strictly smaller than the plain form.
NumericColumnEncoding::Mode dynamic_delta_decide(std::span<const std::int64_t> values);

std::string encode_numeric_column(std::span<const std::int64_t> values,
                                  const NumericColumnEncoding& enc);

struct NumericColumnDecoded {
    std::vector<std::int64_t> values;
    NumericColumnEncoding enc;
};

NumericColumnDecoded decode_numeric_column(ByteReader& r);

/// Renders decoded values back to digit strings, re-padding to the recorded
/// fixed width when present.
std::vector<std::string> render_numeric_values(const NumericColumnDecoded& d);

// Combined-column stream helpers (mode byte 2).
std::string encode_combined_column(std::span<const std::int64_t> values,
                                   std::span<const std::uint8_t> widths,
                                   NumericColumnEncoding::Mode inner);

struct CombinedDecoded {
    std::vector<std::int64_t> values;
    std::vector<std::uint8_t> widths;
    NumericColumnEncoding::Mode inner = NumericColumnEncoding::Mode::Plain;
};

CombinedDecoded decode_combined_column(ByteReader& r);

// Raw-string stream (mode byte 3): lossless escape hatch for values outside
// the 64-bit range.
std::string encode_raw_strings(std::span<const std::string> values);
std::vector<std::string> decode_raw_strings(ByteReader& r);

// ---------------------------------------------------------------------------
// Dictionary streams: elastic(entry_count) || entries as elastic(len) || bytes.
// ---------------------------------------------------------------------------

std::string encode_dictionary(std::span<const std::string> entries);
std::vector<std::string> decode_dictionary(ByteReader& r);

// Digit-string parsing with an explicit overflow signal. Returns nullopt when
// the value does not fit the signed 64-bit carrier required for zigzag deltas.
std::optional<std::int64_t> parse_digits(std::string_view digits);

}  // namespace logfold
