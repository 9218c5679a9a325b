#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logfold/chunk.hpp"
#include "logfold/config.hpp"

namespace logfold {

enum class TokenClass : std::uint8_t {
    Static = 0,
    StructuredDynamic = 1,
    UnstructuredNumeric = 2,
    UnstructuredString = 3,
};

/// Heuristic rules that decide which tokens are dynamic. Which rules are
/// enabled follows the configured token strategy.
struct DynamicRuleSet {
    bool numeric = true;
    bool path = false;
    bool classpath = false;

    static DynamicRuleSet from_strategy(TokenStrategy s);

    bool matches(std::string_view token) const;
};

bool matches_numeric_rule(std::string_view token);
bool matches_path_rule(std::string_view token);
bool matches_classpath_rule(std::string_view token);

struct TokenizeResult {
    std::vector<std::string> tokens;
    std::vector<std::string> runs;  // tokens.size() + 1 entries
};

/// Splits on ASCII whitespace, recording the exact separator bytes so that
/// interleaving runs and tokens reproduces the line.
TokenizeResult tokenize(std::string_view line);

TokenClass classify(std::string_view token, const DynamicRuleSet& rules);

struct ClassifiedLine {
    struct Item {
        TokenClass cls;
        std::string text;
    };
    std::vector<Item> items;        // one per token, in order
    std::vector<std::string> runs;  // items.size() + 1 separator byte runs

    std::size_t dynamic_count() const;
    std::string reconstruct() const;
};

std::vector<ClassifiedLine> analyze_chunk(const LogChunk& chunk, const DynamicRuleSet& rules);

}  // namespace logfold
