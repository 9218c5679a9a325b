#include "logfold/encoder.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "logfold/errors.hpp"
#include "logfold/mining.hpp"
#include "logfold/textclass.hpp"
#include "logfold/token_analyzer.hpp"

namespace logfold {

using nlohmann::json;

namespace {

constexpr char kEscape = '\x01';
constexpr std::size_t kMaxCombinedDigits = 18;

using Clock = std::chrono::steady_clock;

struct StepTimer {
    DecompressProfile* profile;
    std::size_t step;
    Clock::time_point start = Clock::now();

    StepTimer(DecompressProfile* p, std::size_t s) : profile(p), step(s) {}
    ~StepTimer() {
        if (profile)
            profile->seconds[step] +=
                std::chrono::duration<double>(Clock::now() - start).count();
    }
};

}  // namespace

std::string length_tag(std::size_t digit_len) {
    if (digit_len >= 1 && digit_len <= 26)
        return std::string(1, static_cast<char>('a' + digit_len - 1));
    return "a" + std::to_string(digit_len - 26);
}

std::optional<std::size_t> parse_length_tag(std::string_view tag) {
    if (tag.size() == 1 && tag[0] >= 'a' && tag[0] <= 'z')
        return static_cast<std::size_t>(tag[0] - 'a' + 1);
    if (tag.size() >= 2 && tag[0] == 'a') {
        std::size_t n = 0;
        for (const char c : tag.substr(1)) {
            if (!is_ascii_digit(static_cast<unsigned char>(c))) return std::nullopt;
            n = n * 10 + static_cast<std::size_t>(c - '0');
        }
        return n == 0 ? std::nullopt : std::optional<std::size_t>(26 + n);
    }
    return std::nullopt;
}

Placeholder parse_placeholder(std::string_view token) {
    Placeholder p;
    if (token == "<*>") {
        p.kind = Placeholder::Kind::String;
        return p;
    }
    if (token.size() >= 4 && token.front() == '|' && token.back() == '|' && token[1] == 'g') {
        std::uint64_t k = 0;
        bool ok = token.size() > 3;
        for (std::size_t i = 2; i + 1 < token.size(); ++i) {
            if (!is_ascii_digit(static_cast<unsigned char>(token[i]))) {
                ok = false;
                break;
            }
            k = k * 10 + static_cast<std::uint64_t>(token[i] - '0');
        }
        if (ok) {
            p.kind = Placeholder::Kind::Structured;
            p.group = k;
            return p;
        }
    }
    if (token.size() >= 3 && token.front() == '<' && token.back() == '>') {
        if (const auto len = parse_length_tag(token.substr(1, token.size() - 2))) {
            p.kind = Placeholder::Kind::Numeric;
            p.digit_len = *len;
            return p;
        }
    }
    return p;
}

std::string escape_static_token(std::string_view token) {
    if (!token.empty() &&
        (token[0] == kEscape || parse_placeholder(token).kind != Placeholder::Kind::None))
        return kEscape + std::string(token);
    return std::string(token);
}

// ---------------------------------------------------------------------------
// Matrix encoding decisions
// ---------------------------------------------------------------------------

namespace {

bool cell_is_digits(const std::string& v) {
    return all_ascii_digits(v);
}

bool matrix_all_digits(const SubTokenMatrix& m) {
    for (const auto& col : m.columns)
        for (const auto& v : col)
            if (!cell_is_digits(v)) return false;
    return true;
}

/// Uniform cell width per column, or nullopt if any column varies.
std::optional<std::vector<std::uint8_t>> uniform_widths(const SubTokenMatrix& m) {
    std::vector<std::uint8_t> widths;
    for (const auto& col : m.columns) {
        if (col.empty() || col[0].size() > 255) return std::nullopt;
        const std::size_t w = col[0].size();
        for (const auto& v : col)
            if (v.size() != w) return std::nullopt;
        widths.push_back(static_cast<std::uint8_t>(w));
    }
    return widths;
}

long double mean_abs_delta(std::span<const std::int64_t> values, std::size_t n) {
    n = std::min(n, values.size());
    if (n == 0) return 0;
    long double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t d = i == 0 ? values[0] : values[i] - values[i - 1];
        sum += d < 0 ? -static_cast<long double>(d) : static_cast<long double>(d);
    }
    return sum / static_cast<long double>(n);
}

/// True iff the digit string is the canonical rendering of a number that
/// parity-doubling keeps inside the signed 64-bit carrier.
bool mixed_cell_as_number(const std::string& v, std::int64_t& out) {
    if (!cell_is_digits(v)) return false;
    if (v.size() > 1 && v[0] == '0') return false;
    const auto parsed = parse_digits(v);
    if (!parsed || *parsed > INT64_MAX / 2) return false;
    out = *parsed;
    return true;
}

}  // namespace

bool combined_column_decide(const SubTokenMatrix& matrix) {
    if (matrix.cols() == 0 || matrix.rows() == 0) return false;
    if (!matrix_all_digits(matrix)) return false;
    const auto widths = uniform_widths(matrix);
    if (!widths) return false;
    std::size_t total = 0;
    for (const auto w : *widths) total += w;
    if (total == 0 || total > kMaxCombinedDigits) return false;

    const std::size_t n = std::min<std::size_t>(matrix.rows(), 10);
    std::vector<std::int64_t> concat(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::string joined;
        for (const auto& col : matrix.columns) joined += col[r];
        const auto parsed = parse_digits(joined);
        if (!parsed) return false;
        concat[r] = *parsed;
    }
    long double per_column_sum = 0;
    for (const auto& col : matrix.columns) {
        std::vector<std::int64_t> vals(n);
        for (std::size_t r = 0; r < n; ++r) {
            const auto parsed = parse_digits(col[r]);
            if (!parsed) return false;
            vals[r] = *parsed;
        }
        per_column_sum += mean_abs_delta(vals, n);
    }
    return mean_abs_delta(concat, n) < per_column_sum;
}

MatrixPlan decide_matrix_encoding(const SkeletonGroup& group, const Config& cfg) {
    (void)cfg;
    MatrixPlan plan;
    const SubTokenMatrix& m = group.matrix;
    if (matrix_all_digits(m) && combined_column_decide(m)) {
        plan.plan = MatrixPlan::Plan::Combined;
        return plan;
    }
    plan.plan = MatrixPlan::Plan::PerColumn;
    plan.columns.resize(m.cols());
    plan.fixed_width.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& col = m.columns[c];
        bool digits = true, parseable = true, uniform = true, leading_zero = false;
        const std::size_t w0 = col.empty() ? 0 : col[0].size();
        for (const auto& v : col) {
            if (!cell_is_digits(v)) {
                digits = false;
                break;
            }
            if (!parse_digits(v)) parseable = false;
            if (v.size() != w0) uniform = false;
            if (v.size() > 1 && v[0] == '0') leading_zero = true;
        }
        if (!digits || !parseable || (!uniform && leading_zero) || w0 > 255) {
            plan.columns[c] = MatrixPlan::ColumnRoute::Mixed;
        } else {
            plan.columns[c] = MatrixPlan::ColumnRoute::Numeric;
            if (uniform && leading_zero)
                plan.fixed_width[c] = static_cast<std::uint8_t>(w0);
        }
    }
    return plan;
}

// ---------------------------------------------------------------------------
// Pattern serialization
// ---------------------------------------------------------------------------

namespace {

std::string serialize_pattern(const DelimiterSkeleton& sk) {
    std::string out;
    elastic_encode(sk.parts.size(), out);
    for (const auto& p : sk.parts) {
        out.push_back(static_cast<char>(p.kind));
        if (p.kind != SkeletonPart::Kind::Slot) {
            elastic_encode(p.text.size(), out);
            out += p.text;
        }
    }
    return out;
}

DelimiterSkeleton parse_pattern(ByteReader& r) {
    DelimiterSkeleton sk;
    const std::uint64_t n = r.read_varint();
    sk.parts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        SkeletonPart p;
        const std::uint8_t kind = r.read_byte();
        if (kind > 2) throw InternalInconsistency("bad skeleton part kind");
        p.kind = static_cast<SkeletonPart::Kind>(kind);
        if (p.kind != SkeletonPart::Kind::Slot) {
            const std::uint64_t len = r.read_varint();
            p.text = std::string(r.read_bytes(len));
        }
        sk.parts.push_back(std::move(p));
    }
    return sk;
}

const char* mode_name(NumericColumnEncoding::Mode m) {
    return m == NumericColumnEncoding::Mode::Delta ? "delta" : "plain";
}

// ---------------------------------------------------------------------------
// Group stream encoding
// ---------------------------------------------------------------------------

constexpr std::uint8_t kPlanPerColumn = 0;
constexpr std::uint8_t kPlanCombined = 1;

std::string encode_group(const SkeletonGroup& group, const Config& cfg,
                         std::vector<std::string>& strvals, json& plan_json) {
    std::string out = serialize_pattern(group.skeleton);
    const std::size_t rows = group.matrix.rows();
    elastic_encode(rows, out);

    const MatrixPlan plan = decide_matrix_encoding(group, cfg);
    plan_json["rows"] = rows;
    plan_json["pattern"] = group.skeleton.render();

    if (plan.plan == MatrixPlan::Plan::Combined) {
        out.push_back(static_cast<char>(kPlanCombined));
        const auto widths = uniform_widths(group.matrix);
        std::vector<std::int64_t> values(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            std::string joined;
            for (const auto& col : group.matrix.columns) joined += col[r];
            values[r] = *parse_digits(joined);
        }
        const auto inner = dynamic_delta_decide(values);
        out += encode_combined_column(values, *widths, inner);
        plan_json["plan"] = "combined";
        plan_json["mode"] = mode_name(inner);
        plan_json["widths"] = *widths;
        plan_json["zigzag"] = true;
        return out;
    }

    out.push_back(static_cast<char>(kPlanPerColumn));
    plan_json["plan"] = "percol";
    json cols = json::array();
    for (std::size_t c = 0; c < group.matrix.cols(); ++c) {
        const auto& col = group.matrix.columns[c];
        json jc;
        if (plan.columns[c] == MatrixPlan::ColumnRoute::Numeric) {
            out.push_back(static_cast<char>(0));
            std::vector<std::int64_t> values(col.size());
            for (std::size_t r = 0; r < col.size(); ++r) values[r] = *parse_digits(col[r]);
            NumericColumnEncoding enc;
            enc.mode = dynamic_delta_decide(values);
            enc.fixed_width = plan.fixed_width[c];
            out += encode_numeric_column(values, enc);
            jc["kind"] = "num";
            jc["mode"] = mode_name(enc.mode);
            jc["width"] = enc.fixed_width ? *enc.fixed_width : 0;
            jc["zigzag"] = true;
        } else {
            out.push_back(static_cast<char>(1));
            std::unordered_map<std::string_view, std::int64_t> ids;
            std::vector<std::string> column_strings;
            std::vector<std::int64_t> parity(col.size());
            for (std::size_t r = 0; r < col.size(); ++r) {
                std::int64_t number = 0;
                if (mixed_cell_as_number(col[r], number)) {
                    parity[r] = 2 * number;
                } else {
                    auto [it, inserted] =
                        ids.try_emplace(col[r], static_cast<std::int64_t>(ids.size()) + 1);
                    if (inserted) column_strings.push_back(col[r]);
                    parity[r] = 2 * it->second + 1;
                }
            }
            elastic_encode(column_strings.size(), out);
            NumericColumnEncoding enc;
            enc.mode = dynamic_delta_decide(parity);
            out += encode_numeric_column(parity, enc);
            for (auto& s : column_strings) strvals.push_back(std::move(s));
            jc["kind"] = "mixed";
            jc["mode"] = mode_name(enc.mode);
            jc["strings"] = ids.size();
            jc["zigzag"] = true;
        }
        cols.push_back(std::move(jc));
    }
    plan_json["cols"] = std::move(cols);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Chunk encoding
// ---------------------------------------------------------------------------

namespace {

struct Dictionary {
    std::vector<std::string> entries;
    std::unordered_map<std::string, std::uint64_t> index;

    std::uint64_t intern(const std::string& value) {
        const auto it = index.find(value);
        if (it != index.end()) return it->second;
        const std::uint64_t id = entries.size();
        index.emplace(value, id);
        entries.push_back(value);
        return id;
    }
};

std::string encode_id_stream(const std::vector<std::uint64_t>& ids) {
    std::string out;
    elastic_encode(ids.size(), out);
    for (const auto id : ids) elastic_encode(id, out);
    return out;
}

std::uint64_t occurrence_key(std::uint32_t line, std::uint32_t dyn) {
    return (static_cast<std::uint64_t>(line) << 32) | dyn;
}

}  // namespace

EncodedChunk encode_chunk(const LogChunk& chunk, const Config& cfg) {
    const auto rules = DynamicRuleSet::from_strategy(cfg.token_strategy);
    const std::vector<ClassifiedLine> lines = analyze_chunk(chunk, rules);
    const bool hybrid = !cfg.disable_hybrid_encoder;

    // Collect structured tokens and run the processor.
    std::vector<SkeletonGroup> groups;
    std::unordered_map<std::uint64_t, std::uint64_t> group_of;
    if (hybrid) {
        std::vector<std::pair<RowId, std::string>> structured;
        for (std::uint32_t li = 0; li < lines.size(); ++li) {
            std::uint32_t dyn = 0;
            for (const auto& item : lines[li].items) {
                if (item.cls == TokenClass::Static) continue;
                if (item.cls == TokenClass::StructuredDynamic)
                    structured.emplace_back(RowId{li, dyn}, item.text);
                ++dyn;
            }
        }
        groups = process(group_by_skeleton(structured), cfg);
        for (std::uint64_t k = 0; k < groups.size(); ++k)
            for (const RowId& row : groups[k].matrix.row_ids)
                group_of[occurrence_key(row.line, row.dyn_index)] = k;
    }

    // Length-based grouping of unstructured numbers; dictionary ids for
    // unstructured strings (and for everything dynamic when the hybrid
    // encoder is disabled).
    std::map<std::size_t, std::vector<std::string>> length_groups;
    Dictionary token_dict;
    std::vector<std::uint64_t> str_ids;
    Dictionary template_dict;
    std::vector<std::uint64_t> tpl_ids;

    for (std::uint32_t li = 0; li < lines.size(); ++li) {
        const ClassifiedLine& cl = lines[li];
        std::string tpl = cl.runs[0];
        std::uint32_t dyn = 0;
        for (std::size_t i = 0; i < cl.items.size(); ++i) {
            const auto& item = cl.items[i];
            if (item.cls == TokenClass::Static) {
                tpl += escape_static_token(item.text);
            } else if (!hybrid) {
                tpl += "<*>";
                str_ids.push_back(token_dict.intern(item.text));
                ++dyn;
            } else {
                switch (item.cls) {
                    case TokenClass::StructuredDynamic: {
                        const auto it = group_of.find(occurrence_key(li, dyn));
                        if (it == group_of.end())
                            throw InternalInconsistency("structured token missing from groups");
                        tpl += "|g" + std::to_string(it->second) + "|";
                        break;
                    }
                    case TokenClass::UnstructuredNumeric:
                        tpl += "<" + length_tag(item.text.size()) + ">";
                        length_groups[item.text.size()].push_back(item.text);
                        break;
                    case TokenClass::UnstructuredString:
                        tpl += "<*>";
                        str_ids.push_back(token_dict.intern(item.text));
                        break;
                    default:
                        break;
                }
                ++dyn;
            }
            tpl += cl.runs[i + 1];
        }
        tpl_ids.push_back(template_dict.intern(tpl));
    }

    // Group streams (fills the string-value dictionary as a side effect).
    std::vector<std::string> strvals;
    std::vector<std::string> group_payloads;
    json group_plans = json::array();
    for (const auto& g : groups) {
        json plan;
        group_payloads.push_back(encode_group(g, cfg, strvals, plan));
        group_plans.push_back(std::move(plan));
    }

    EncodedChunk out;
    out.manifest.line_count = chunk.lines.size();
    out.manifest.template_count = template_dict.entries.size();
    out.manifest.token_count = token_dict.entries.size();
    out.manifest.strval_count = strvals.size();
    out.manifest.group_count = groups.size();
    out.manifest.group_plans = std::move(group_plans);

    auto add = [&out](std::string name, StreamKind kind, std::string payload) {
        out.manifest.streams.emplace_back(name, kind);
        out.streams.push_back({std::move(name), kind, std::move(payload)});
    };

    add("templates.dict", StreamKind::TemplateDictionary,
        encode_dictionary(template_dict.entries));
    add("tokens.dict", StreamKind::TokenDictionary, encode_dictionary(token_dict.entries));
    add("strvals.dict", StreamKind::StringValueDictionary, encode_dictionary(strvals));
    add("tpl_ids.bin", StreamKind::IdStream, encode_id_stream(tpl_ids));
    add("str_ids.bin", StreamKind::IdStream, encode_id_stream(str_ids));
    for (std::size_t k = 0; k < group_payloads.size(); ++k)
        add("g" + std::to_string(k) + ".bin", StreamKind::SkeletonCatalog,
            std::move(group_payloads[k]));

    for (auto& [len, values] : length_groups) {
        const std::string tag = length_tag(len);
        out.manifest.length_tags.push_back(tag);
        std::string payload;
        if (len <= kMaxCombinedDigits) {
            std::vector<std::int64_t> parsed(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) parsed[i] = *parse_digits(values[i]);
            NumericColumnEncoding enc;
            enc.mode = dynamic_delta_decide(parsed);
            enc.fixed_width = static_cast<std::uint8_t>(len);
            payload = encode_numeric_column(parsed, enc);
        } else {
            // Values beyond the 64-bit carrier: lossless raw fallback.
            payload = encode_raw_strings(values);
        }
        add("len_" + tag + ".bin", StreamKind::NumericStream, std::move(payload));
    }

    std::string lineterm;
    elastic_encode(chunk.lines.size(), lineterm);
    lineterm.push_back(chunk.last_line_terminated ? '\x01' : '\x00');
    add("lineterm.bin", StreamKind::Metadata, std::move(lineterm));
    return out;
}

// ---------------------------------------------------------------------------
// Chunk decoding
// ---------------------------------------------------------------------------

const char* DecompressProfile::step_name(std::size_t step) {
    switch (step) {
        case 1: return "outer container decode";
        case 2: return "archive unpack";
        case 3: return "template id decode";
        case 4: return "static sequence recovery";
        case 5: return "string id decode";
        case 6: return "matrix stream decode";
        case 7: return "numeric restoration";
        case 8: return "final assembly";
    }
    return "?";
}

namespace {

struct DecodedGroup {
    DelimiterSkeleton pattern;
    std::size_t rows = 0;
    // Integer stage (step 6).
    bool combined = false;
    std::vector<std::int64_t> combined_values;
    std::vector<std::uint8_t> combined_widths;
    struct Column {
        bool mixed = false;
        std::uint64_t string_count = 0;
        std::size_t strval_base = 0;
        NumericColumnDecoded numeric;
    };
    std::vector<Column> columns;
    // Text stage (step 7).
    std::vector<std::vector<std::string>> cells;  // per column
    std::size_t cursor = 0;
};

const EncodedStream& find_stream(const std::vector<EncodedStream>& streams,
                                 const std::string& name) {
    for (const auto& s : streams)
        if (s.name == name) return s;
    throw CorruptArchive("missing stream: " + name);
}

std::vector<std::uint64_t> decode_id_stream(const EncodedStream& s) {
    ByteReader r(s.payload);
    const std::uint64_t count = r.read_varint();
    std::vector<std::uint64_t> ids;
    ids.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) ids.push_back(r.read_varint());
    if (!r.at_end()) throw InternalInconsistency("trailing bytes in id stream " + s.name);
    return ids;
}

void check_plan(bool ok, const char* what) {
    if (!ok)
        throw InternalInconsistency(std::string("manifest/stream plan mismatch: ") + what);
}

}  // namespace

std::string decode_chunk(const ChunkManifest& cm, const std::vector<EncodedStream>& streams,
                         DecompressProfile* profile) {
    // Step 3: template id stream.
    std::vector<std::uint64_t> tpl_ids;
    {
        StepTimer t(profile, 3);
        tpl_ids = decode_id_stream(find_stream(streams, "tpl_ids.bin"));
        if (tpl_ids.size() != cm.line_count)
            throw InternalInconsistency("template id count does not match line count");
    }

    // Step 4: recover the static token sequences (template text per line).
    std::vector<std::string> templates;
    {
        StepTimer t(profile, 4);
        ByteReader r(find_stream(streams, "templates.dict").payload);
        templates = decode_dictionary(r);
        if (templates.size() != cm.template_count)
            throw InternalInconsistency("template dictionary size mismatch");
        for (const auto id : tpl_ids)
            if (id >= templates.size())
                throw InternalInconsistency("template id out of range");
    }

    // Step 5: string ids and the token dictionary.
    std::vector<std::string> tokens;
    std::vector<std::uint64_t> str_ids;
    {
        StepTimer t(profile, 5);
        ByteReader r(find_stream(streams, "tokens.dict").payload);
        tokens = decode_dictionary(r);
        if (tokens.size() != cm.token_count)
            throw InternalInconsistency("token dictionary size mismatch");
        str_ids = decode_id_stream(find_stream(streams, "str_ids.bin"));
        for (const auto id : str_ids)
            if (id >= tokens.size()) throw InternalInconsistency("string id out of range");
    }

    // Step 6: matrix streams to integers.
    std::vector<std::string> strvals;
    std::vector<DecodedGroup> groups(cm.group_count);
    {
        StepTimer t(profile, 6);
        ByteReader rv(find_stream(streams, "strvals.dict").payload);
        strvals = decode_dictionary(rv);
        if (strvals.size() != cm.strval_count)
            throw InternalInconsistency("string value dictionary size mismatch");

        std::size_t strval_cursor = 0;
        for (std::uint64_t k = 0; k < cm.group_count; ++k) {
            const json& plan = cm.group_plans.at(k);
            DecodedGroup& g = groups[k];
            ByteReader r(find_stream(streams, "g" + std::to_string(k) + ".bin").payload);
            g.pattern = parse_pattern(r);
            g.rows = r.read_varint();
            check_plan(g.rows == plan.at("rows").get<std::size_t>(), "group row count");
            const std::uint8_t plan_byte = r.read_byte();
            if (plan_byte == kPlanCombined) {
                check_plan(plan.at("plan") == "combined", "group plan kind");
                g.combined = true;
                CombinedDecoded d = decode_combined_column(r);
                if (d.values.size() != g.rows)
                    throw InternalInconsistency("combined column row mismatch");
                if (d.widths.size() != g.pattern.open_slot_count())
                    throw InternalInconsistency("combined widths do not match open slots");
                g.combined_values = std::move(d.values);
                g.combined_widths = std::move(d.widths);
            } else if (plan_byte == kPlanPerColumn) {
                check_plan(plan.at("plan") == "percol", "group plan kind");
                const std::size_t cols = g.pattern.open_slot_count();
                check_plan(plan.at("cols").size() == cols, "group column count");
                g.columns.resize(cols);
                for (std::size_t c = 0; c < cols; ++c) {
                    DecodedGroup::Column& col = g.columns[c];
                    const json& jc = plan.at("cols").at(c);
                    const std::uint8_t colkind = r.read_byte();
                    if (colkind == 1) {
                        check_plan(jc.at("kind") == "mixed", "column kind");
                        col.mixed = true;
                        col.string_count = r.read_varint();
                        check_plan(col.string_count == jc.at("strings").get<std::uint64_t>(),
                                   "mixed string count");
                        col.strval_base = strval_cursor;
                        strval_cursor += col.string_count;
                        if (strval_cursor > strvals.size())
                            throw InternalInconsistency(
                                "mixed columns consume more strings than declared");
                    } else if (colkind == 0) {
                        check_plan(jc.at("kind") == "num", "column kind");
                    } else {
                        throw InternalInconsistency("bad column kind byte");
                    }
                    col.numeric = decode_numeric_column(r);
                    if (col.numeric.values.size() != g.rows)
                        throw InternalInconsistency("column row count mismatch");
                    check_plan(std::string(mode_name(col.numeric.enc.mode)) ==
                                   jc.at("mode").get<std::string>(),
                               "column mode");
                }
            } else {
                throw InternalInconsistency("bad group plan byte");
            }
            if (!r.at_end()) throw InternalInconsistency("trailing bytes in group stream");
        }
        if (strval_cursor != strvals.size())
            throw InternalInconsistency("unused entries in string value dictionary");
    }

    // Step 7: numeric restoration (integers back to digit strings; mixed ids
    // back through the dictionary; length-group streams).
    std::map<std::size_t, std::vector<std::string>> length_values;  // digit len -> values
    std::map<std::size_t, std::size_t> length_cursor;
    {
        StepTimer t(profile, 7);
        for (DecodedGroup& g : groups) {
            const std::size_t cols = g.pattern.open_slot_count();
            g.cells.resize(cols);
            if (g.combined) {
                std::size_t total = 0;
                for (const auto w : g.combined_widths) total += w;
                for (std::size_t c = 0; c < cols; ++c) g.cells[c].reserve(g.rows);
                for (const std::int64_t v : g.combined_values) {
                    if (v < 0) throw InternalInconsistency("negative combined value");
                    std::string s = std::to_string(v);
                    if (s.size() > total)
                        throw InternalInconsistency("combined value wider than declared");
                    s.insert(0, total - s.size(), '0');
                    std::size_t off = 0;
                    for (std::size_t c = 0; c < cols; ++c) {
                        g.cells[c].push_back(s.substr(off, g.combined_widths[c]));
                        off += g.combined_widths[c];
                    }
                }
            } else {
                for (std::size_t c = 0; c < cols; ++c) {
                    const DecodedGroup::Column& col = g.columns[c];
                    auto& cells = g.cells[c];
                    cells.reserve(g.rows);
                    if (col.mixed) {
                        for (const std::int64_t v : col.numeric.values) {
                            if (v < 0) throw InternalInconsistency("negative mixed value");
                            if ((v & 1) == 0) {
                                cells.push_back(std::to_string(v / 2));
                            } else {
                                const std::int64_t id = (v - 1) / 2;
                                if (id < 1 ||
                                    static_cast<std::uint64_t>(id) > col.string_count)
                                    throw InternalInconsistency("mixed string id out of range");
                                cells.push_back(
                                    strvals[col.strval_base + static_cast<std::size_t>(id) - 1]);
                            }
                        }
                    } else {
                        for (const std::int64_t v : col.numeric.values) {
                            if (v < 0) throw InternalInconsistency("negative numeric cell");
                            std::string s = std::to_string(v);
                            if (col.numeric.enc.fixed_width) {
                                if (s.size() > *col.numeric.enc.fixed_width)
                                    throw InternalInconsistency("value wider than fixed width");
                                s.insert(0, *col.numeric.enc.fixed_width - s.size(), '0');
                            }
                            cells.push_back(std::move(s));
                        }
                    }
                }
            }
        }

        for (const auto& tag : cm.length_tags) {
            const auto len = parse_length_tag(tag);
            if (!len) throw CorruptArchive("bad length tag in manifest: " + tag);
            const EncodedStream& s = find_stream(streams, "len_" + tag + ".bin");
            ByteReader r(s.payload);
            std::vector<std::string> values;
            if (*len <= kMaxCombinedDigits) {
                const NumericColumnDecoded d = decode_numeric_column(r);
                if (!d.enc.fixed_width || *d.enc.fixed_width != *len)
                    throw InternalInconsistency("length group width mismatch");
                for (const std::int64_t v : d.values)
                    if (v < 0) throw InternalInconsistency("negative length-group value");
                values = render_numeric_values(d);
            } else {
                values = decode_raw_strings(r);
                for (const auto& v : values)
                    if (v.size() != *len)
                        throw InternalInconsistency("raw length-group entry width mismatch");
            }
            if (!r.at_end()) throw InternalInconsistency("trailing bytes in length stream");
            length_values.emplace(*len, std::move(values));
            length_cursor.emplace(*len, 0);
        }
    }

    // Step 8: final assembly.
    StepTimer t(profile, 8);
    std::string out;
    bool last_terminated = true;
    {
        ByteReader r(find_stream(streams, "lineterm.bin").payload);
        const std::uint64_t n = r.read_varint();
        if (n != cm.line_count) throw InternalInconsistency("lineterm count mismatch");
        last_terminated = r.read_byte() != 0;
        if (!r.at_end()) throw InternalInconsistency("trailing bytes in lineterm stream");
    }

    std::size_t str_cursor = 0;
    for (std::size_t li = 0; li < tpl_ids.size(); ++li) {
        const std::string& tpl = templates[tpl_ids[li]];
        const TokenizeResult tk = tokenize(tpl);
        std::string line = tk.runs[0];
        for (std::size_t i = 0; i < tk.tokens.size(); ++i) {
            const std::string& tok = tk.tokens[i];
            if (!tok.empty() && tok[0] == kEscape) {
                line.append(tok, 1, tok.size() - 1);
            } else {
                const Placeholder p = parse_placeholder(tok);
                switch (p.kind) {
                    case Placeholder::Kind::None:
                        line += tok;
                        break;
                    case Placeholder::Kind::String: {
                        if (str_cursor >= str_ids.size())
                            throw InternalInconsistency("string id stream exhausted");
                        line += tokens[str_ids[str_cursor++]];
                        break;
                    }
                    case Placeholder::Kind::Numeric: {
                        const auto it = length_values.find(p.digit_len);
                        if (it == length_values.end())
                            throw InternalInconsistency("missing length group for tag");
                        std::size_t& cur = length_cursor[p.digit_len];
                        if (cur >= it->second.size())
                            throw InternalInconsistency("length group exhausted");
                        line += it->second[cur++];
                        break;
                    }
                    case Placeholder::Kind::Structured: {
                        if (p.group >= groups.size())
                            throw InternalInconsistency("group id out of range");
                        DecodedGroup& g = groups[p.group];
                        if (g.cursor >= g.rows)
                            throw InternalInconsistency("group rows exhausted");
                        std::size_t c = 0;
                        for (const auto& part : g.pattern.parts) {
                            if (part.kind == SkeletonPart::Kind::Slot)
                                line += g.cells[c++][g.cursor];
                            else
                                line += part.text;
                        }
                        ++g.cursor;
                        break;
                    }
                }
            }
            line += tk.runs[i + 1];
        }
        out += line;
        if (li + 1 < tpl_ids.size() || last_terminated) out += '\n';
    }

    if (str_cursor != str_ids.size())
        throw InternalInconsistency("unused entries in string id stream");
    for (const auto& g : groups)
        if (g.cursor != g.rows) throw InternalInconsistency("unused rows in skeleton group");
    for (const auto& [len, cur] : length_cursor)
        if (cur != length_values[len].size())
            throw InternalInconsistency("unused values in length group");
    return out;
}

}  // namespace logfold
