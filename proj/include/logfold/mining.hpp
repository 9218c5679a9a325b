#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "logfold/config.hpp"
#include "logfold/skeleton.hpp"

namespace logfold {

struct ColumnStats {
    std::size_t unique_count = 0;
    /// Values whose frequency meets the dynamic threshold rows/uniques,
    /// with their frequencies, ordered by first appearance.
    std::vector<std::pair<std::string, std::size_t>> representatives;
    double dominance_ratio = 0.0;
    double shannon_entropy = 0.0;  // bits
};

struct CriticalPosition {
    std::size_t column = 0;
    ColumnStats stats;
    bool accepted = false;
};

ColumnStats column_stats(std::span<const std::string> column);

/// Embeds every single-unique-value column into its skeleton slot.
SkeletonGroup fold_constant_columns(SkeletonGroup group);

/// Ranks candidate columns by fewest uniques, then highest dominance, then
/// lowest entropy, then lowest index; validates the winner against theta_rv
/// and phi_d. Columns whose part index is in `blocked` are skipped.
std::optional<CriticalPosition> select_critical_position(
    const SkeletonGroup& group, const Config& cfg,
    const std::set<std::size_t>& blocked = {});

struct RegroupResult {
    std::vector<SkeletonGroup> subgroups;
    /// Index into subgroups of the partial-regrouping residual, if any.
    std::optional<std::size_t> residual;
    /// Part index of the critical column (still open in the residual).
    std::size_t critical_part = 0;
};

RegroupResult regroup(const SkeletonGroup& group, const CriticalPosition& cp, const Config& cfg);

/// Final pattern refinement: 100%-support frequent-itemset mining over
/// (value, column) items; embeds the resulting constant columns.
SkeletonGroup refine_patterns(SkeletonGroup group);

/// Full structured-token mining: constant folding, then iterated critical
/// position selection, re-grouping, and refinement, bounded by
/// cfg.max_mining_depth. With cfg.disable_processor the input groups are
/// returned unchanged (skeleton grouping only).
std::vector<SkeletonGroup> process(std::vector<SkeletonGroup> groups, const Config& cfg);

}  // namespace logfold
