#include "logfold/codecs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "logfold/errors.hpp"

namespace logfold {

namespace {

constexpr std::uint8_t kModeMask = 0x03;
constexpr std::uint8_t kFlagFixedWidth = 0x80;
constexpr std::uint8_t kFlagCombinedDelta = 0x40;
constexpr std::uint8_t kModeCombined = 2;
constexpr std::uint8_t kModeRawStrings = 3;

}  // namespace

void elastic_encode(std::uint64_t n, std::string& out) {
    while (n >= 0x80) {
        out.push_back(static_cast<char>((n & 0x7F) | 0x80));
        n >>= 7;
    }
    out.push_back(static_cast<char>(n));
}

std::string elastic_encode(std::uint64_t n) {
    std::string out;
    elastic_encode(n, out);
    return out;
}

ElasticDecoded elastic_decode(std::string_view bytes, std::size_t offset) {
    std::uint64_t value = 0;
    unsigned shift = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        if (offset + i >= bytes.size())
            throw MalformedVarint("varint truncated at offset " + std::to_string(offset));
        const auto b = static_cast<std::uint8_t>(bytes[offset + i]);
        if (shift == 63 && (b & 0x7E) != 0)
            throw MalformedVarint("varint exceeds 64 bits");
        value |= static_cast<std::uint64_t>(b & 0x7F) << shift;
        if ((b & 0x80) == 0) return {value, i + 1};
        shift += 7;
    }
    throw MalformedVarint("varint has no terminator within 10 bytes");
}

std::uint64_t ByteReader::read_varint() {
    const ElasticDecoded d = elastic_decode(data_, pos_);
    pos_ += d.consumed;
    return d.value;
}

std::uint8_t ByteReader::read_byte() {
    if (pos_ >= data_.size()) throw MalformedVarint("stream truncated reading byte");
    return static_cast<std::uint8_t>(data_[pos_++]);
}

std::string_view ByteReader::read_bytes(std::size_t n) {
    if (pos_ + n > data_.size()) throw MalformedVarint("stream truncated reading bytes");
    const std::string_view out = data_.substr(pos_, n);
    pos_ += n;
    return out;
}

NumericColumnEncoding::Mode dynamic_delta_decide(std::span<const std::int64_t> values) {
    const std::size_t n = std::min<std::size_t>(values.size(), 10);
    if (n == 0) return NumericColumnEncoding::Mode::Plain;
    long double plain_sum = 0, delta_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        plain_sum += std::fabs(static_cast<long double>(values[i]));
        const std::int64_t d = i == 0 ? values[0] : values[i] - values[i - 1];
        delta_sum += std::fabs(static_cast<long double>(d));
    }
    // Ties keep the plain form.
    return delta_sum < plain_sum ? NumericColumnEncoding::Mode::Delta
                                 : NumericColumnEncoding::Mode::Plain;
}

std::string encode_numeric_column(std::span<const std::int64_t> values,
                                  const NumericColumnEncoding& enc) {
    std::string out;
    elastic_encode(values.size(), out);
    std::uint8_t mode = static_cast<std::uint8_t>(enc.mode);
    if (enc.fixed_width) mode |= kFlagFixedWidth;
    out.push_back(static_cast<char>(mode));
    if (enc.fixed_width) out.push_back(static_cast<char>(*enc.fixed_width));
    if (enc.mode == NumericColumnEncoding::Mode::Delta) {
        std::int64_t prev = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::int64_t d = i == 0 ? values[0] : values[i] - prev;
            elastic_encode(zigzag(d), out);
            prev = values[i];
        }
    } else {
        for (const std::int64_t v : values) elastic_encode(zigzag(v), out);
    }
    return out;
}

NumericColumnDecoded decode_numeric_column(ByteReader& r) {
    NumericColumnDecoded d;
    const std::uint64_t count = r.read_varint();
    const std::uint8_t mode = r.read_byte();
    const std::uint8_t m = mode & kModeMask;
    if (m > 1) throw InternalInconsistency("unexpected mode in numeric column stream");
    d.enc.mode = static_cast<NumericColumnEncoding::Mode>(m);
    if (mode & kFlagFixedWidth) d.enc.fixed_width = r.read_byte();
    d.values.reserve(count);
    std::int64_t prev = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::int64_t v = unzigzag(r.read_varint());
        if (d.enc.mode == NumericColumnEncoding::Mode::Delta) {
            prev = i == 0 ? v : prev + v;
            d.values.push_back(prev);
        } else {
            d.values.push_back(v);
        }
    }
    return d;
}

std::vector<std::string> render_numeric_values(const NumericColumnDecoded& d) {
    std::vector<std::string> out;
    out.reserve(d.values.size());
    for (const std::int64_t v : d.values) {
        std::string s = std::to_string(v);
        if (d.enc.fixed_width && s.size() < *d.enc.fixed_width)
            s.insert(0, *d.enc.fixed_width - s.size(), '0');
        out.push_back(std::move(s));
    }
    return out;
}

std::string encode_combined_column(std::span<const std::int64_t> values,
                                   std::span<const std::uint8_t> widths,
                                   NumericColumnEncoding::Mode inner) {
    std::string out;
    elastic_encode(values.size(), out);
    std::uint8_t mode = kModeCombined;
    if (inner == NumericColumnEncoding::Mode::Delta) mode |= kFlagCombinedDelta;
    out.push_back(static_cast<char>(mode));
    out.push_back(static_cast<char>(widths.size()));
    for (const std::uint8_t w : widths) out.push_back(static_cast<char>(w));
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (inner == NumericColumnEncoding::Mode::Delta) {
            elastic_encode(zigzag(i == 0 ? values[0] : values[i] - prev), out);
            prev = values[i];
        } else {
            elastic_encode(zigzag(values[i]), out);
        }
    }
    return out;
}

CombinedDecoded decode_combined_column(ByteReader& r) {
    CombinedDecoded d;
    const std::uint64_t count = r.read_varint();
    const std::uint8_t mode = r.read_byte();
    if ((mode & kModeMask) != kModeCombined)
        throw InternalInconsistency("expected combined-column stream");
    d.inner = (mode & kFlagCombinedDelta) ? NumericColumnEncoding::Mode::Delta
                                          : NumericColumnEncoding::Mode::Plain;
    const std::uint8_t cols = r.read_byte();
    for (std::uint8_t i = 0; i < cols; ++i) d.widths.push_back(r.read_byte());
    d.values.reserve(count);
    std::int64_t prev = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::int64_t v = unzigzag(r.read_varint());
        if (d.inner == NumericColumnEncoding::Mode::Delta) {
            prev = i == 0 ? v : prev + v;
            d.values.push_back(prev);
        } else {
            d.values.push_back(v);
        }
    }
    return d;
}

std::string encode_raw_strings(std::span<const std::string> values) {
    std::string out;
    elastic_encode(values.size(), out);
    out.push_back(static_cast<char>(kModeRawStrings));
    for (const auto& v : values) {
        elastic_encode(v.size(), out);
        out += v;
    }
    return out;
}

std::vector<std::string> decode_raw_strings(ByteReader& r) {
    const std::uint64_t count = r.read_varint();
    const std::uint8_t mode = r.read_byte();
    if ((mode & kModeMask) != kModeRawStrings)
        throw InternalInconsistency("expected raw-string stream");
    std::vector<std::string> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t len = r.read_varint();
        out.emplace_back(r.read_bytes(len));
    }
    return out;
}

std::string encode_dictionary(std::span<const std::string> entries) {
    std::string out;
    elastic_encode(entries.size(), out);
    for (const auto& e : entries) {
        elastic_encode(e.size(), out);
        out += e;
    }
    return out;
}

std::vector<std::string> decode_dictionary(ByteReader& r) {
    const std::uint64_t count = r.read_varint();
    std::vector<std::string> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t len = r.read_varint();
        out.emplace_back(r.read_bytes(len));
    }
    return out;
}

std::optional<std::int64_t> parse_digits(std::string_view digits) {
    if (digits.empty() || digits.size() > 19) return std::nullopt;
    std::int64_t v = 0;
    for (const char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
        const int d = c - '0';
        if (v > (INT64_MAX - d) / 10) return std::nullopt;
        v = v * 10 + d;
    }
    return v;
}

}  // namespace logfold
