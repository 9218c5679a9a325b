#include "logfold/manifest.hpp"

#include "logfold/errors.hpp"

namespace logfold {

using nlohmann::json;

const char* to_string(StreamKind k) {
    switch (k) {
        case StreamKind::TokenDictionary: return "token_dict";
        case StreamKind::TemplateDictionary: return "template_dict";
        case StreamKind::StringValueDictionary: return "strval_dict";
        case StreamKind::IdStream: return "id_stream";
        case StreamKind::NumericStream: return "numeric_stream";
        case StreamKind::SkeletonCatalog: return "skeleton_catalog";
        case StreamKind::Metadata: return "metadata";
    }
    return "?";
}

StreamKind stream_kind_from_string(const std::string& s) {
    if (s == "token_dict") return StreamKind::TokenDictionary;
    if (s == "template_dict") return StreamKind::TemplateDictionary;
    if (s == "strval_dict") return StreamKind::StringValueDictionary;
    if (s == "id_stream") return StreamKind::IdStream;
    if (s == "numeric_stream") return StreamKind::NumericStream;
    if (s == "skeleton_catalog") return StreamKind::SkeletonCatalog;
    if (s == "metadata") return StreamKind::Metadata;
    throw CorruptArchive("unknown stream kind: " + s);
}

std::string ArchiveManifest::serialize() const {
    json j;
    j["magic"] = "logfold";
    j["version"] = format_version;
    j["config"] = {
        {"chunk_lines", config.chunk_lines},
        {"theta_rv", config.theta_rv},
        {"phi_d", config.phi_d},
        {"zeta_uv", config.zeta_uv},
        {"backend", to_string(config.backend)},
        {"backend_level", config.backend_level},
        {"token_strategy", to_string(config.token_strategy)},
        {"max_mining_depth", config.max_mining_depth},
        {"disable_processor", config.disable_processor},
        {"disable_hybrid_encoder", config.disable_hybrid_encoder},
    };
    j["chunks"] = json::array();
    for (const auto& c : chunks) {
        json jc;
        jc["lines"] = c.line_count;
        jc["templates"] = c.template_count;
        jc["tokens"] = c.token_count;
        jc["strvals"] = c.strval_count;
        jc["groups"] = c.group_count;
        jc["length_tags"] = c.length_tags;
        jc["group_plans"] = c.group_plans;
        json js = json::array();
        for (const auto& [name, kind] : c.streams)
            js.push_back({{"name", name}, {"kind", to_string(kind)}});
        jc["streams"] = js;
        j["chunks"].push_back(std::move(jc));
    }
    const std::vector<std::uint8_t> cbor = json::to_cbor(j);
    return std::string(cbor.begin(), cbor.end());
}

ArchiveManifest ArchiveManifest::deserialize(const std::string& bytes) {
    json j;
    try {
        j = json::from_cbor(bytes);
    } catch (const json::exception&) {
        throw CorruptArchive("manifest is not valid CBOR");
    }
    try {
        if (j.at("magic").get<std::string>() != "logfold")
            throw UnsupportedVersion("manifest magic mismatch");
        ArchiveManifest m;
        m.format_version = j.at("version").get<std::uint32_t>();
        if (m.format_version != kFormatVersion)
            throw UnsupportedVersion("unsupported archive format version " +
                                     std::to_string(m.format_version));
        const json& jc = j.at("config");
        m.config.chunk_lines = jc.at("chunk_lines").get<std::size_t>();
        m.config.theta_rv = jc.at("theta_rv").get<std::uint32_t>();
        m.config.phi_d = jc.at("phi_d").get<double>();
        m.config.zeta_uv = jc.at("zeta_uv").get<std::uint32_t>();
        m.config.backend = backend_from_string(jc.at("backend").get<std::string>());
        m.config.backend_level = jc.at("backend_level").get<int>();
        m.config.token_strategy = strategy_from_string(jc.at("token_strategy").get<std::string>());
        m.config.max_mining_depth = jc.at("max_mining_depth").get<std::uint32_t>();
        m.config.disable_processor = jc.at("disable_processor").get<bool>();
        m.config.disable_hybrid_encoder = jc.at("disable_hybrid_encoder").get<bool>();
        for (const json& c : j.at("chunks")) {
            ChunkManifest cm;
            cm.line_count = c.at("lines").get<std::uint64_t>();
            cm.template_count = c.at("templates").get<std::uint64_t>();
            cm.token_count = c.at("tokens").get<std::uint64_t>();
            cm.strval_count = c.at("strvals").get<std::uint64_t>();
            cm.group_count = c.at("groups").get<std::uint64_t>();
            cm.length_tags = c.at("length_tags").get<std::vector<std::string>>();
            cm.group_plans = c.at("group_plans");
            for (const json& s : c.at("streams"))
                cm.streams.emplace_back(s.at("name").get<std::string>(),
                                        stream_kind_from_string(s.at("kind").get<std::string>()));
            m.chunks.push_back(std::move(cm));
        }
        return m;
    } catch (const json::exception& e) {
        throw CorruptArchive(std::string("manifest field error: ") + e.what());
    }
}

}  // namespace logfold
