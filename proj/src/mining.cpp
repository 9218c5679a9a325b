#include "logfold/mining.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "logfold/errors.hpp"
#include "logfold/fpgrowth.hpp"

namespace logfold {

ColumnStats column_stats(std::span<const std::string> column) {
    ColumnStats st;
    const std::size_t rows = column.size();
    std::unordered_map<std::string_view, std::size_t> freq;
    for (const auto& v : column) ++freq[v];
    st.unique_count = freq.size();

    const double threshold =
        static_cast<double>(rows) / static_cast<double>(st.unique_count);

    std::size_t rep_rows = 0;
    std::unordered_map<std::string_view, bool> seen;
    for (const auto& v : column) {
        if (seen[v]) continue;
        seen[v] = true;
        const std::size_t f = freq[v];
        if (static_cast<double>(f) >= threshold) {
            st.representatives.emplace_back(v, f);
            rep_rows += f;
        }
    }
    st.dominance_ratio = rows == 0 ? 0.0 : static_cast<double>(rep_rows) / rows;

    double entropy = 0.0;
    for (const auto& [v, f] : freq) {
        const double p = static_cast<double>(f) / rows;
        entropy -= p * std::log2(p);
    }
    st.shannon_entropy = entropy;
    return st;
}

namespace {

/// Embeds `value` into the skeleton part backing column `col` and drops the
/// column from the matrix.
void embed_column(SkeletonGroup& g, std::size_t col, const std::string& value) {
    SkeletonPart& part = g.skeleton.parts[g.column_parts[col]];
    part.kind = SkeletonPart::Kind::Constant;
    part.text = value;
    g.matrix.columns.erase(g.matrix.columns.begin() + static_cast<std::ptrdiff_t>(col));
    g.column_parts.erase(g.column_parts.begin() + static_cast<std::ptrdiff_t>(col));
}

bool column_is_constant(const std::vector<std::string>& column) {
    for (std::size_t i = 1; i < column.size(); ++i)
        if (column[i] != column[0]) return false;
    return !column.empty();
}

}  // namespace

SkeletonGroup fold_constant_columns(SkeletonGroup group) {
    for (std::size_t c = 0; c < group.matrix.cols();) {
        if (group.matrix.rows() > 0 && column_is_constant(group.matrix.columns[c]))
            embed_column(group, c, group.matrix.columns[c][0]);
        else
            ++c;
    }
    return group;
}

std::optional<CriticalPosition> select_critical_position(
    const SkeletonGroup& group, const Config& cfg, const std::set<std::size_t>& blocked) {
    if (group.matrix.rows() < 2 || group.matrix.cols() == 0) return std::nullopt;

    std::optional<CriticalPosition> best;
    const std::size_t rows = group.matrix.rows();
    for (std::size_t c = 0; c < group.matrix.cols(); ++c) {
        if (blocked.count(group.column_parts[c])) continue;
        ColumnStats st = column_stats(group.matrix.columns[c]);
        if (st.representatives.empty()) continue;
        // A column needs repeated values to partition on; otherwise the
        // dynamic threshold degenerates and every value is "representative".
        if (st.unique_count * 2 > rows) continue;
        if (!best) {
            best = CriticalPosition{c, std::move(st), false};
            continue;
        }
        const ColumnStats& b = best->stats;
        const bool wins =
            st.unique_count != b.unique_count ? st.unique_count < b.unique_count
            : st.dominance_ratio != b.dominance_ratio ? st.dominance_ratio > b.dominance_ratio
            : st.shannon_entropy != b.shannon_entropy ? st.shannon_entropy < b.shannon_entropy
                                                      : false;  // lower index already held
        if (wins) best = CriticalPosition{c, std::move(st), false};
    }
    if (!best) return std::nullopt;
    // A strict subset of values must dominate; if every unique value clears
    // the dynamic threshold the column is uniform and partitioning on it only
    // fragments the group.
    best->accepted = best->stats.representatives.size() < best->stats.unique_count &&
                     (best->stats.representatives.size() < cfg.theta_rv ||
                      best->stats.dominance_ratio > cfg.phi_d);
    if (!best->accepted) return std::nullopt;
    return best;
}

namespace {

SkeletonGroup make_subgroup(const SkeletonGroup& group, const std::vector<std::size_t>& rows,
                            std::optional<std::pair<std::size_t, std::string>> embed) {
    SkeletonGroup sub;
    sub.skeleton = group.skeleton;
    sub.column_parts = group.column_parts;
    sub.matrix.columns.resize(group.matrix.cols());
    for (std::size_t c = 0; c < group.matrix.cols(); ++c) {
        sub.matrix.columns[c].reserve(rows.size());
        for (const std::size_t r : rows) sub.matrix.columns[c].push_back(group.matrix.columns[c][r]);
    }
    sub.matrix.row_ids.reserve(rows.size());
    for (const std::size_t r : rows) sub.matrix.row_ids.push_back(group.matrix.row_ids[r]);
    if (embed) embed_column(sub, embed->first, embed->second);
    return sub;
}

}  // namespace

RegroupResult regroup(const SkeletonGroup& group, const CriticalPosition& cp, const Config& cfg) {
    RegroupResult out;
    out.critical_part = group.column_parts[cp.column];
    const auto& column = group.matrix.columns[cp.column];

    if (cp.stats.unique_count <= cfg.zeta_uv) {
        // Full re-grouping: one subgroup per unique value, first-appearance order.
        std::vector<std::string> order;
        std::unordered_map<std::string_view, std::vector<std::size_t>> rows_by_value;
        for (std::size_t r = 0; r < column.size(); ++r) {
            auto [it, inserted] = rows_by_value.try_emplace(column[r]);
            if (inserted) order.push_back(column[r]);
            it->second.push_back(r);
        }
        for (const auto& value : order)
            out.subgroups.push_back(
                make_subgroup(group, rows_by_value[value], {{cp.column, value}}));
        return out;
    }

    // Partial re-grouping: subgroups for representative values only; minor
    // rows stay under the generic skeleton with the column intact.
    std::unordered_map<std::string_view, std::size_t> rep_index;
    for (std::size_t i = 0; i < cp.stats.representatives.size(); ++i)
        rep_index.emplace(cp.stats.representatives[i].first, i);

    std::vector<std::vector<std::size_t>> rep_rows(cp.stats.representatives.size());
    std::vector<std::size_t> minor_rows;
    for (std::size_t r = 0; r < column.size(); ++r) {
        auto it = rep_index.find(column[r]);
        if (it != rep_index.end())
            rep_rows[it->second].push_back(r);
        else
            minor_rows.push_back(r);
    }
    for (std::size_t i = 0; i < rep_rows.size(); ++i)
        out.subgroups.push_back(make_subgroup(
            group, rep_rows[i], {{cp.column, cp.stats.representatives[i].first}}));
    if (!minor_rows.empty()) {
        out.residual = out.subgroups.size();
        out.subgroups.push_back(make_subgroup(group, minor_rows, std::nullopt));
    }
    return out;
}

SkeletonGroup refine_patterns(SkeletonGroup group) {
    const std::size_t rows = group.matrix.rows();
    if (rows == 0 || group.matrix.cols() == 0) return group;

    std::map<std::pair<std::size_t, std::string>, int> item_ids;
    std::vector<std::pair<std::size_t, std::string>> items;
    std::vector<std::vector<int>> transactions(rows);
    for (std::size_t c = 0; c < group.matrix.cols(); ++c) {
        for (std::size_t r = 0; r < rows; ++r) {
            auto key = std::make_pair(c, group.matrix.columns[c][r]);
            auto it = item_ids.find(key);
            if (it == item_ids.end()) {
                it = item_ids.emplace(key, static_cast<int>(items.size())).first;
                items.push_back(key);
            }
            transactions[r].push_back(it->second);
        }
    }

    const auto frequent = mine_frequent_itemsets(transactions, rows);
    std::set<std::size_t> constant_cols;
    std::map<std::size_t, std::string> constant_value;
    for (const auto& itemset : frequent) {
        for (const int id : itemset) {
            const auto& [col, value] = items[static_cast<std::size_t>(id)];
            constant_cols.insert(col);
            constant_value[col] = value;
        }
    }
    // Embed from the highest column index down so indices stay valid.
    for (auto it = constant_cols.rbegin(); it != constant_cols.rend(); ++it)
        embed_column(group, *it, constant_value[*it]);
    return group;
}

namespace {

void process_recursive(SkeletonGroup group, const Config& cfg, std::uint32_t depth,
                       std::set<std::size_t> blocked, std::vector<SkeletonGroup>& out) {
    group = fold_constant_columns(std::move(group));
    if (depth >= cfg.max_mining_depth || group.matrix.rows() < 2 || group.matrix.cols() == 0) {
        out.push_back(std::move(group));
        return;
    }
    const auto cp = select_critical_position(group, cfg, blocked);
    if (!cp) {
        out.push_back(std::move(group));
        return;
    }
    RegroupResult rr = regroup(group, *cp, cfg);
    for (std::size_t i = 0; i < rr.subgroups.size(); ++i) {
        SkeletonGroup sub = refine_patterns(std::move(rr.subgroups[i]));
        std::set<std::size_t> sub_blocked = blocked;
        if (rr.residual && i == *rr.residual) sub_blocked.insert(rr.critical_part);
        process_recursive(std::move(sub), cfg, depth + 1, std::move(sub_blocked), out);
    }
}

}  // namespace

std::vector<SkeletonGroup> process(std::vector<SkeletonGroup> groups, const Config& cfg) {
    if (cfg.disable_processor) return groups;
    std::vector<SkeletonGroup> out;
    for (auto& g : groups) process_recursive(std::move(g), cfg, 0, {}, out);
    std::sort(out.begin(), out.end(), [](const SkeletonGroup& a, const SkeletonGroup& b) {
        const std::string ka = a.skeleton.key(), kb = b.skeleton.key();
        if (ka != kb) return ka < kb;
        const RowId ra = a.matrix.row_ids.empty() ? RowId{} : a.matrix.row_ids.front();
        const RowId rb = b.matrix.row_ids.empty() ? RowId{} : b.matrix.row_ids.front();
        return ra < rb;
    });
    return out;
}

}  // namespace logfold
