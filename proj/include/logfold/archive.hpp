#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "logfold/manifest.hpp"

namespace logfold {

/// Assembles manifest + per-chunk streams into a deterministic tar and
/// finishes with the configured backend compressor. Member order: manifest
/// first, then chunks in index order with streams in manifest order.
std::string pack(const std::vector<std::vector<EncodedStream>>& chunks,
                 const ArchiveManifest& manifest, const Config& cfg);

struct UnpackedArchive {
    ArchiveManifest manifest;
    /// streams[chunk][i] matches manifest.chunks[chunk].streams[i].
    std::vector<std::vector<EncodedStream>> chunks;
};

/// Exact inverse of pack's container layers; validates that the manifest and
/// the archive members agree before handing streams out.
UnpackedArchive unpack(std::string_view archive);

/// Inner layer only (tar + manifest), for callers that already peeled the
/// backend container.
UnpackedArchive unpack_inner(std::string_view tar_bytes);

}  // namespace logfold
