#pragma once

#include <cstddef>
#include <vector>

namespace logfold {

/// FP-Growth over transactions of integer item ids. Returns every itemset
/// whose support (number of containing transactions) is >= min_support.
/// Items within a returned itemset are sorted ascending.
std::vector<std::vector<int>> mine_frequent_itemsets(
    const std::vector<std::vector<int>>& transactions, std::size_t min_support);

}  // namespace logfold
