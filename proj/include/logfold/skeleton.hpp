#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logfold {

/// Source coordinate of one structured token: chunk-relative line index and
/// the token's ordinal among that line's dynamic tokens.
struct RowId {
    std::uint32_t line = 0;
    std::uint32_t dyn_index = 0;

    friend bool operator==(const RowId&, const RowId&) = default;
    friend auto operator<=>(const RowId&, const RowId&) = default;
};

struct SkeletonPart {
    enum class Kind : std::uint8_t { Literal = 0, Slot = 1, Constant = 2 };
    Kind kind = Kind::Literal;
    std::string text;  // delimiter run for Literal, folded value for Constant
};

/// Alternating delimiter runs and sub-token positions. Slots become Constants
/// as mining embeds values; adjacent Literal parts never occur.
struct DelimiterSkeleton {
    std::vector<SkeletonPart> parts;

    std::size_t open_slot_count() const;
    /// Grouping/ordering key: literals rendered verbatim, slots as "<>",
    /// constants as their value, with 0x01 separators to keep it injective.
    std::string key() const;
    /// Human-readable rendering, e.g. "2015-<>-<>".
    std::string render() const;
};

struct SubTokenMatrix {
    std::vector<std::vector<std::string>> columns;
    std::vector<RowId> row_ids;

    std::size_t rows() const { return row_ids.size(); }
    std::size_t cols() const { return columns.size(); }
};

struct SkeletonGroup {
    DelimiterSkeleton skeleton;
    SubTokenMatrix matrix;
    /// Part index in `skeleton` backing each matrix column; stable ids used to
    /// avoid re-splitting a residual subgroup on its own critical column.
    std::vector<std::size_t> column_parts;

    /// Rebuilds the original token bytes for one row.
    std::string reconstruct_row(std::size_t row) const;
};

/// Splits a structured token into its delimiter skeleton and sub-tokens.
/// Throws std::invalid_argument if the token has no alphanumeric content.
std::pair<DelimiterSkeleton, std::vector<std::string>> extract_skeleton(std::string_view token);

std::vector<SkeletonGroup> group_by_skeleton(
    const std::vector<std::pair<RowId, std::string>>& tokens);

}  // namespace logfold
