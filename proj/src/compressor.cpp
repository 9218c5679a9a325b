#include "logfold/compressor.hpp"

#include <chrono>
#include <future>
#include <thread>

#include "logfold/archive.hpp"
#include "logfold/backend.hpp"
#include "logfold/chunk.hpp"
#include "logfold/errors.hpp"

namespace logfold {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<EncodedChunk> encode_all(const std::vector<LogChunk>& chunks, const Config& cfg,
                                     bool parallel) {
    std::vector<EncodedChunk> encoded(chunks.size());
    if (parallel && chunks.size() > 1) {
        std::vector<std::future<EncodedChunk>> futures;
        futures.reserve(chunks.size());
        for (const auto& c : chunks)
            futures.push_back(std::async(std::launch::async,
                                         [&c, &cfg] { return encode_chunk(c, cfg); }));
        for (std::size_t i = 0; i < futures.size(); ++i) encoded[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < chunks.size(); ++i)
            encoded[i] = encode_chunk(chunks[i], cfg);
    }
    return encoded;
}

}  // namespace

std::string compress(std::string_view input, const Config& cfg, bool parallel) {
    cfg.validate();
    const std::vector<LogChunk> chunks = chunk_input(input, cfg);
    std::vector<EncodedChunk> encoded = encode_all(chunks, cfg, parallel);

    ArchiveManifest manifest;
    manifest.config = cfg;
    std::vector<std::vector<EncodedStream>> streams;
    manifest.chunks.reserve(encoded.size());
    streams.reserve(encoded.size());
    for (auto& e : encoded) {
        manifest.chunks.push_back(std::move(e.manifest));
        streams.push_back(std::move(e.streams));
    }
    return pack(streams, manifest, cfg);
}

std::string decompress(std::string_view archive, bool parallel) {
    const UnpackedArchive a = unpack(archive);
    std::vector<std::string> parts(a.chunks.size());
    if (parallel && a.chunks.size() > 1) {
        std::vector<std::future<std::string>> futures;
        futures.reserve(a.chunks.size());
        for (std::size_t i = 0; i < a.chunks.size(); ++i)
            futures.push_back(std::async(std::launch::async, [&a, i] {
                return decode_chunk(a.manifest.chunks[i], a.chunks[i]);
            }));
        for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < a.chunks.size(); ++i)
            parts[i] = decode_chunk(a.manifest.chunks[i], a.chunks[i]);
    }
    std::string out;
    for (auto& p : parts) out += p;
    return out;
}

std::string decompress_profiled(std::string_view archive, DecompressProfile& profile) {
    const auto t0 = Clock::now();
    const std::string tar_bytes = backend_decompress(archive);
    const auto t1 = Clock::now();
    profile.seconds[1] += std::chrono::duration<double>(t1 - t0).count();

    const UnpackedArchive a = unpack_inner(tar_bytes);
    const auto t2 = Clock::now();
    profile.seconds[2] += std::chrono::duration<double>(t2 - t1).count();

    std::string out;
    for (std::size_t i = 0; i < a.chunks.size(); ++i)
        out += decode_chunk(a.manifest.chunks[i], a.chunks[i], &profile);

    profile.total = 0;
    for (std::size_t s = 1; s <= DecompressProfile::kSteps; ++s)
        profile.total += profile.seconds[s];
    return out;
}

}  // namespace logfold
