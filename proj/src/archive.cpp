#include "logfold/archive.hpp"

#include <map>

#include "logfold/backend.hpp"
#include "logfold/errors.hpp"
#include "logfold/tar.hpp"

namespace logfold {

namespace {

std::string member_path(std::size_t chunk, const std::string& stream_name) {
    return "c" + std::to_string(chunk) + "/" + stream_name;
}

}  // namespace

std::string pack(const std::vector<std::vector<EncodedStream>>& chunks,
                 const ArchiveManifest& manifest, const Config& cfg) {
    if (chunks.size() != manifest.chunks.size())
        throw InternalInconsistency("manifest chunk count does not match streams");

    TarWriter tar;
    tar.add("manifest.bin", manifest.serialize());
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const auto& listed = manifest.chunks[c].streams;
        if (listed.size() != chunks[c].size())
            throw InternalInconsistency("manifest stream listing mismatch for chunk " +
                                        std::to_string(c));
        for (std::size_t i = 0; i < chunks[c].size(); ++i) {
            if (chunks[c][i].name != listed[i].first)
                throw InternalInconsistency("stream name/manifest mismatch: " +
                                            chunks[c][i].name);
            tar.add(member_path(c, chunks[c][i].name), chunks[c][i].payload);
        }
    }
    return backend_compress(tar.finish(), cfg.backend, cfg.backend_level);
}

UnpackedArchive unpack(std::string_view archive) {
    const std::string tar_bytes = backend_decompress(archive);
    return unpack_inner(tar_bytes);
}

UnpackedArchive unpack_inner(std::string_view tar_bytes) {
    const std::vector<TarMember> members = tar_read(tar_bytes);
    if (members.empty() || members.front().name != "manifest.bin")
        throw CorruptArchive("archive does not start with manifest.bin");

    UnpackedArchive out;
    out.manifest = ArchiveManifest::deserialize(members.front().content);

    std::map<std::string, const TarMember*> by_name;
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (!by_name.emplace(members[i].name, &members[i]).second)
            throw CorruptArchive("duplicate archive member: " + members[i].name);
    }

    std::size_t referenced = 0;
    out.chunks.resize(out.manifest.chunks.size());
    for (std::size_t c = 0; c < out.manifest.chunks.size(); ++c) {
        for (const auto& [name, kind] : out.manifest.chunks[c].streams) {
            const auto it = by_name.find(member_path(c, name));
            if (it == by_name.end())
                throw CorruptArchive("manifest references missing stream: " + name);
            out.chunks[c].push_back({name, kind, it->second->content});
            ++referenced;
        }
    }
    if (referenced != by_name.size())
        throw CorruptArchive("archive contains members the manifest does not reference");
    return out;
}

}  // namespace logfold
