#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logfold/chunk.hpp"
#include "logfold/codecs.hpp"
#include "logfold/config.hpp"
#include "logfold/manifest.hpp"
#include "logfold/skeleton.hpp"

namespace logfold {

// ---------------------------------------------------------------------------
// Placeholder vocabulary used inside template strings.
//   |g<k>|        structured token, row drawn from skeleton group k
//   <*>           unstructured string, id drawn from the token dictionary
//   <a> .. <z>    unstructured number of digit length 1..26
//   <a1>, <a2>..  digit lengths 27, 28, ...
// Static tokens that would collide with this vocabulary (or begin with the
// escape byte 0x01) are stored with a 0x01 prefix.
// ---------------------------------------------------------------------------

std::string length_tag(std::size_t digit_len);
std::optional<std::size_t> parse_length_tag(std::string_view tag);

struct Placeholder {
    enum class Kind : std::uint8_t { None, Structured, String, Numeric };
    Kind kind = Kind::None;
    std::uint64_t group = 0;      // Structured
    std::size_t digit_len = 0;    // Numeric
};

Placeholder parse_placeholder(std::string_view token);
std::string escape_static_token(std::string_view token);

// ---------------------------------------------------------------------------
// Per-chunk hybrid encoding.
// ---------------------------------------------------------------------------

struct EncodedChunk {
    std::vector<EncodedStream> streams;  // canonical archive order
    ChunkManifest manifest;
};

EncodedChunk encode_chunk(const LogChunk& chunk, const Config& cfg);

/// Wall time per decompression step, seconds. Steps 1 and 2 (outer container,
/// unpack) are filled by the decompressor driver; 3-8 by decode_chunk.
struct DecompressProfile {
    static constexpr std::size_t kSteps = 8;
    std::array<double, kSteps + 1> seconds{};  // 1-based
    double total = 0.0;

    static const char* step_name(std::size_t step);
};

/// Inverts one chunk back to its raw bytes (lines plus terminators).
/// Throws InternalInconsistency whenever any invariant check fails.
std::string decode_chunk(const ChunkManifest& cm, const std::vector<EncodedStream>& streams,
                         DecompressProfile* profile = nullptr);

// Exposed for unit tests: encoding decision helpers.
bool combined_column_decide(const SubTokenMatrix& matrix);

struct MatrixPlan {
    enum class Plan : std::uint8_t { PerColumn, Combined };
    enum class ColumnRoute : std::uint8_t { Numeric, Mixed };
    Plan plan = Plan::PerColumn;
    std::vector<ColumnRoute> columns;                     // PerColumn only
    std::vector<std::optional<std::uint8_t>> fixed_width; // per Numeric column
};

MatrixPlan decide_matrix_encoding(const SkeletonGroup& group, const Config& cfg);

}  // namespace logfold
