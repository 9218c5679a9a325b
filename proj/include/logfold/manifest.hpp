#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "logfold/config.hpp"

namespace logfold {

enum class StreamKind : std::uint8_t {
    TokenDictionary = 0,
    TemplateDictionary = 1,
    StringValueDictionary = 2,
    IdStream = 3,
    NumericStream = 4,
    SkeletonCatalog = 5,
    Metadata = 6,
};

const char* to_string(StreamKind k);
StreamKind stream_kind_from_string(const std::string& s);

/// One named, typed payload destined for the archive.
struct EncodedStream {
    std::string name;
    StreamKind kind = StreamKind::Metadata;
    std::string payload;
};

/// Everything the decompressor needs to invert a chunk, beyond what the
/// streams themselves self-describe. Serialized as CBOR inside manifest.bin.
struct ChunkManifest {
    std::uint64_t line_count = 0;
    std::uint64_t template_count = 0;
    std::uint64_t token_count = 0;
    std::uint64_t strval_count = 0;
    std::uint64_t group_count = 0;
    std::vector<std::string> length_tags;         // e.g. "a", "b", "a1"
    nlohmann::json group_plans = nlohmann::json::array();
    std::vector<std::pair<std::string, StreamKind>> streams;  // name -> kind
};

struct ArchiveManifest {
    static constexpr std::uint32_t kFormatVersion = 1;

    std::uint32_t format_version = kFormatVersion;
    // Config fields that affect decoding, snapshotted for the record.
    Config config;
    std::vector<ChunkManifest> chunks;

    std::string serialize() const;
    static ArchiveManifest deserialize(const std::string& bytes);
};

}  // namespace logfold
