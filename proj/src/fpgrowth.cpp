#include "logfold/fpgrowth.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_map>

namespace logfold {

namespace {

struct FpNode {
    int item = -1;
    std::size_t count = 0;
    FpNode* parent = nullptr;
    std::vector<std::unique_ptr<FpNode>> children;
};

struct FpTree {
    FpNode root;
    // Header table: item -> nodes carrying it.
    std::map<int, std::vector<FpNode*>> header;
    std::map<int, std::size_t> item_support;

    void insert(const std::vector<int>& items, std::size_t count) {
        FpNode* node = &root;
        for (const int item : items) {
            FpNode* child = nullptr;
            for (auto& c : node->children)
                if (c->item == item) {
                    child = c.get();
                    break;
                }
            if (!child) {
                auto owned = std::make_unique<FpNode>();
                owned->item = item;
                owned->parent = node;
                child = owned.get();
                node->children.push_back(std::move(owned));
                header[item].push_back(child);
            }
            child->count += count;
            node = child;
        }
    }
};

void mine(const FpTree& tree, std::size_t min_support, std::vector<int>& suffix,
          std::vector<std::vector<int>>& out) {
    // Iterate items in ascending order; conditional trees recurse.
    for (const auto& [item, support] : tree.item_support) {
        if (support < min_support) continue;

        std::vector<int> itemset = suffix;
        itemset.push_back(item);
        std::sort(itemset.begin(), itemset.end());
        out.push_back(itemset);

        // Build the conditional pattern base for this item.
        std::vector<std::pair<std::vector<int>, std::size_t>> paths;
        auto it = tree.header.find(item);
        if (it == tree.header.end()) continue;
        std::map<int, std::size_t> cond_support;
        for (const FpNode* node : it->second) {
            std::vector<int> path;
            for (const FpNode* p = node->parent; p && p->item != -1; p = p->parent)
                path.push_back(p->item);
            std::reverse(path.begin(), path.end());
            if (!path.empty()) {
                for (const int i2 : path) cond_support[i2] += node->count;
                paths.emplace_back(std::move(path), node->count);
            }
        }

        FpTree cond;
        for (const auto& [i2, s] : cond_support)
            if (s >= min_support) cond.item_support[i2] = s;
        if (cond.item_support.empty()) continue;
        for (auto& [path, count] : paths) {
            std::vector<int> filtered;
            for (const int i2 : path)
                if (cond.item_support.count(i2)) filtered.push_back(i2);
            if (!filtered.empty()) cond.insert(filtered, count);
        }
        std::vector<int> next_suffix = itemset;
        mine(cond, min_support, next_suffix, out);
    }
}

}  // namespace

std::vector<std::vector<int>> mine_frequent_itemsets(
    const std::vector<std::vector<int>>& transactions, std::size_t min_support) {
    std::vector<std::vector<int>> out;
    if (min_support == 0) min_support = 1;

    FpTree tree;
    for (const auto& t : transactions)
        for (const int item : t) ++tree.item_support[item];
    for (auto it = tree.item_support.begin(); it != tree.item_support.end();) {
        if (it->second < min_support)
            it = tree.item_support.erase(it);
        else
            ++it;
    }
    if (tree.item_support.empty()) return out;

    for (const auto& t : transactions) {
        std::vector<int> filtered;
        for (const int item : t)
            if (tree.item_support.count(item)) filtered.push_back(item);
        // Insert in decreasing support order (ties by item id) for compactness.
        std::sort(filtered.begin(), filtered.end(), [&](int a, int b) {
            const auto sa = tree.item_support.at(a), sb = tree.item_support.at(b);
            return sa != sb ? sa > sb : a < b;
        });
        filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());
        if (!filtered.empty()) tree.insert(filtered, 1);
    }

    std::vector<int> suffix;
    mine(tree, min_support, suffix, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace logfold
