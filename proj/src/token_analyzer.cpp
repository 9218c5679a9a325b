#include "logfold/token_analyzer.hpp"

#include "logfold/textclass.hpp"

namespace logfold {

DynamicRuleSet DynamicRuleSet::from_strategy(TokenStrategy s) {
    DynamicRuleSet r;
    r.numeric = true;
    r.path = s == TokenStrategy::NumPath || s == TokenStrategy::All;
    r.classpath = s == TokenStrategy::NumClasspath || s == TokenStrategy::All;
    return r;
}

bool matches_numeric_rule(std::string_view token) {
    for (const char c : token)
        if (is_ascii_digit(static_cast<unsigned char>(c))) return true;
    return false;
}

bool matches_path_rule(std::string_view token) {
    if (token.find('/') != std::string_view::npos) return true;
    // Windows drive prefix: letter, colon, backslash.
    if (token.size() >= 3) {
        const char c = token[0];
        if (((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) && token[1] == ':' &&
            token[2] == '\\')
            return true;
    }
    return false;
}

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

}  // namespace

bool matches_classpath_rule(std::string_view token) {
    // Unanchored search for ident(.ident)+ with at least one dot.
    std::size_t i = 0;
    while (i < token.size()) {
        if (!is_ident_start(token[i])) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < token.size() && is_ident_char(token[j])) ++j;
        std::size_t segments = 1;
        while (j + 1 < token.size() && token[j] == '.' && is_ident_start(token[j + 1])) {
            ++segments;
            j += 2;
            while (j < token.size() && is_ident_char(token[j])) ++j;
        }
        if (segments >= 2) return true;
        i = j;
    }
    return false;
}

bool DynamicRuleSet::matches(std::string_view token) const {
    if (numeric && matches_numeric_rule(token)) return true;
    if (path && matches_path_rule(token)) return true;
    if (classpath && matches_classpath_rule(token)) return true;
    return false;
}

TokenizeResult tokenize(std::string_view line) {
    TokenizeResult r;
    std::size_t i = 0;
    std::string run;
    while (true) {
        run.clear();
        while (i < line.size() && is_ascii_space(static_cast<unsigned char>(line[i])))
            run += line[i++];
        r.runs.push_back(run);
        if (i == line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !is_ascii_space(static_cast<unsigned char>(line[i]))) ++i;
        r.tokens.emplace_back(line.substr(start, i - start));
    }
    return r;
}

TokenClass classify(std::string_view token, const DynamicRuleSet& rules) {
    if (!rules.matches(token)) return TokenClass::Static;
    if (has_mixed_content(token)) return TokenClass::StructuredDynamic;
    if (all_ascii_digits(token)) return TokenClass::UnstructuredNumeric;
    if (has_any_alnum(token)) return TokenClass::UnstructuredString;
    // No sub-tokens at all (e.g. "--" under an over-broad rule): keep static.
    return TokenClass::Static;
}

std::size_t ClassifiedLine::dynamic_count() const {
    std::size_t n = 0;
    for (const auto& it : items)
        if (it.cls != TokenClass::Static) ++n;
    return n;
}

std::string ClassifiedLine::reconstruct() const {
    std::string out = runs[0];
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += items[i].text;
        out += runs[i + 1];
    }
    return out;
}

std::vector<ClassifiedLine> analyze_chunk(const LogChunk& chunk, const DynamicRuleSet& rules) {
    std::vector<ClassifiedLine> out;
    out.reserve(chunk.lines.size());
    for (const auto& line : chunk.lines) {
        TokenizeResult t = tokenize(line);
        ClassifiedLine cl;
        cl.runs = std::move(t.runs);
        cl.items.reserve(t.tokens.size());
        for (auto& tok : t.tokens) {
            const TokenClass cls = classify(tok, rules);
            cl.items.push_back({cls, std::move(tok)});
        }
        out.push_back(std::move(cl));
    }
    return out;
}

}  // namespace logfold
