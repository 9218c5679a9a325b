#include "logfold/skeleton.hpp"

#include <map>
#include <stdexcept>

#include "logfold/errors.hpp"
#include "logfold/textclass.hpp"

namespace logfold {

std::size_t DelimiterSkeleton::open_slot_count() const {
    std::size_t n = 0;
    for (const auto& p : parts)
        if (p.kind == SkeletonPart::Kind::Slot) ++n;
    return n;
}

std::string DelimiterSkeleton::key() const {
    std::string k;
    for (const auto& p : parts) {
        k += static_cast<char>('0' + static_cast<int>(p.kind));
        k += p.text;
        k += '\x01';
    }
    return k;
}

std::string DelimiterSkeleton::render() const {
    std::string out;
    for (const auto& p : parts)
        out += p.kind == SkeletonPart::Kind::Slot ? std::string("<>") : p.text;
    return out;
}

std::string SkeletonGroup::reconstruct_row(std::size_t row) const {
    std::string out;
    std::size_t col = 0;
    for (const auto& p : skeleton.parts) {
        if (p.kind == SkeletonPart::Kind::Slot) {
            if (col >= matrix.cols())
                throw InternalInconsistency("skeleton slot without matrix column");
            out += matrix.columns[col++][row];
        } else {
            out += p.text;
        }
    }
    return out;
}

std::pair<DelimiterSkeleton, std::vector<std::string>> extract_skeleton(std::string_view token) {
    DelimiterSkeleton sk;
    std::vector<std::string> subs;
    std::string current;
    bool current_alnum = false;
    bool have_current = false;

    auto flush = [&] {
        if (!have_current) return;
        if (current_alnum) {
            sk.parts.push_back({SkeletonPart::Kind::Slot, {}});
            subs.push_back(current);
        } else {
            sk.parts.push_back({SkeletonPart::Kind::Literal, current});
        }
        current.clear();
    };

    std::size_t i = 0;
    while (i < token.size()) {
        const Utf8Char u = decode_utf8(token, i);
        const bool alnum = u.valid && is_alnum_codepoint(u.cp);
        if (!have_current || alnum != current_alnum) {
            flush();
            have_current = true;
            current_alnum = alnum;
        }
        current.append(token.substr(i, u.len));
        i += u.len;
    }
    flush();

    if (subs.empty())
        throw std::invalid_argument("extract_skeleton: token has no alphanumeric run");
    return {std::move(sk), std::move(subs)};
}

std::vector<SkeletonGroup> group_by_skeleton(
    const std::vector<std::pair<RowId, std::string>>& tokens) {
    // std::map keeps group order deterministic by skeleton key.
    std::map<std::string, SkeletonGroup> groups;
    for (const auto& [row_id, token] : tokens) {
        auto [sk, subs] = extract_skeleton(token);
        const std::string key = sk.key();
        auto it = groups.find(key);
        if (it == groups.end()) {
            SkeletonGroup g;
            g.matrix.columns.resize(subs.size());
            std::size_t col = 0;
            for (std::size_t p = 0; p < sk.parts.size(); ++p)
                if (sk.parts[p].kind == SkeletonPart::Kind::Slot) g.column_parts.push_back(p), ++col;
            g.skeleton = std::move(sk);
            it = groups.emplace(key, std::move(g)).first;
        }
        SkeletonGroup& g = it->second;
        if (subs.size() != g.matrix.cols())
            throw InternalInconsistency("sub-token count mismatch within skeleton group");
        for (std::size_t c = 0; c < subs.size(); ++c)
            g.matrix.columns[c].push_back(std::move(subs[c]));
        g.matrix.row_ids.push_back(row_id);
    }

    std::vector<SkeletonGroup> out;
    out.reserve(groups.size());
    for (auto& [key, g] : groups) out.push_back(std::move(g));
    return out;
}

}  // namespace logfold
