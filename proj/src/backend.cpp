#include "logfold/backend.hpp"

#include <algorithm>
#include <cstring>
#include <memory>

#include <lzma.h>
#include <zlib.h>

#include "logfold/errors.hpp"

#ifdef LOGFOLD_HAVE_BZIP2
// The runtime ships libbz2.so.1 without its development header; the one-shot
// buffer API below has been ABI-stable since bzip2 1.0.
extern "C" {
int BZ2_bzBuffToBuffCompress(char* dest, unsigned* destLen, char* source, unsigned sourceLen,
                             int blockSize100k, int verbosity, int workFactor);
int BZ2_bzBuffToBuffDecompress(char* dest, unsigned* destLen, char* source, unsigned sourceLen,
                               int small, int verbosity);
}
#endif

namespace logfold {

namespace {

std::string gzip_compress(std::string_view data, int level) {
    if (level == 0) level = 6;
    z_stream zs{};
    if (deflateInit2(&zs, level, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY) != Z_OK)
        throw BackendUnavailable("zlib deflateInit2 failed");
    std::string out;
    out.resize(deflateBound(&zs, static_cast<uLong>(data.size())) + 32);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_FINISH);
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) throw IoFailure("gzip compression failed");
    out.resize(out.size() - zs.avail_out);
    return out;
}

std::string gzip_decompress(std::string_view data) {
    z_stream zs{};
    if (inflateInit2(&zs, 15 + 32) != Z_OK)
        throw BackendUnavailable("zlib inflateInit2 failed");
    std::string out;
    out.resize(std::max<std::size_t>(data.size() * 4, 1 << 16));
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    std::size_t written = 0;
    int rc = Z_OK;
    while (true) {
        zs.next_out = reinterpret_cast<Bytef*>(out.data() + written);
        zs.avail_out = static_cast<uInt>(out.size() - written);
        rc = inflate(&zs, Z_NO_FLUSH);
        written = out.size() - zs.avail_out;
        if (rc == Z_STREAM_END) break;
        if (rc == Z_OK || rc == Z_BUF_ERROR) {
            if (zs.avail_out == 0) {
                out.resize(out.size() * 2);
                continue;
            }
            if (rc == Z_BUF_ERROR || zs.avail_in == 0) {
                inflateEnd(&zs);
                throw CorruptArchive("truncated gzip stream");
            }
            continue;
        }
        inflateEnd(&zs);
        throw CorruptArchive("damaged gzip stream");
    }
    inflateEnd(&zs);
    out.resize(written);
    return out;
}

std::string xz_compress(std::string_view data, int level) {
    const std::uint32_t preset = level == 0 ? 6u : static_cast<std::uint32_t>(level);
    std::string out;
    out.resize(lzma_stream_buffer_bound(data.size()));
    std::size_t out_pos = 0;
    const lzma_ret rc = lzma_easy_buffer_encode(
        preset, LZMA_CHECK_CRC64, nullptr,
        reinterpret_cast<const std::uint8_t*>(data.data()), data.size(),
        reinterpret_cast<std::uint8_t*>(out.data()), &out_pos, out.size());
    if (rc != LZMA_OK) throw IoFailure("xz compression failed");
    out.resize(out_pos);
    return out;
}

std::string xz_decompress(std::string_view data) {
    lzma_stream strm = LZMA_STREAM_INIT;
    if (lzma_stream_decoder(&strm, UINT64_MAX, 0) != LZMA_OK)
        throw BackendUnavailable("lzma decoder init failed");
    std::string out;
    out.resize(std::max<std::size_t>(data.size() * 4, 1 << 16));
    strm.next_in = reinterpret_cast<const std::uint8_t*>(data.data());
    strm.avail_in = data.size();
    std::size_t written = 0;
    while (true) {
        strm.next_out = reinterpret_cast<std::uint8_t*>(out.data() + written);
        strm.avail_out = out.size() - written;
        const lzma_ret rc = lzma_code(&strm, LZMA_FINISH);
        written = out.size() - strm.avail_out;
        if (rc == LZMA_STREAM_END) break;
        if (rc == LZMA_OK || rc == LZMA_BUF_ERROR) {
            if (strm.avail_out == 0) {
                out.resize(out.size() * 2);
                continue;
            }
            lzma_end(&strm);
            throw CorruptArchive("truncated xz stream");
        }
        lzma_end(&strm);
        throw CorruptArchive("damaged xz stream");
    }
    lzma_end(&strm);
    out.resize(written);
    return out;
}

#ifdef LOGFOLD_HAVE_BZIP2
std::string bzip2_compress(std::string_view data, int level) {
    if (level == 0) level = 9;
    if (data.size() > 0xFFFFFFFFull / 2)
        throw IoFailure("bzip2 one-shot API limited to 32-bit sizes");
    std::string out;
    out.resize(data.size() + data.size() / 100 + 600 + 64);
    unsigned dest_len = static_cast<unsigned>(out.size());
    const int rc = BZ2_bzBuffToBuffCompress(out.data(), &dest_len,
                                            const_cast<char*>(data.data()),
                                            static_cast<unsigned>(data.size()), level, 0, 0);
    if (rc != 0) throw IoFailure("bzip2 compression failed");
    out.resize(dest_len);
    return out;
}

std::string bzip2_decompress(std::string_view data) {
    if (data.size() > 0xFFFFFFFFull)
        throw CorruptArchive("bzip2 stream too large for one-shot API");
    std::size_t cap = std::max<std::size_t>(data.size() * 8, 1 << 16);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::string out;
        out.resize(cap);
        unsigned dest_len = static_cast<unsigned>(std::min<std::size_t>(cap, 0xFFFFFFF0ull));
        const int rc = BZ2_bzBuffToBuffDecompress(out.data(), &dest_len,
                                                  const_cast<char*>(data.data()),
                                                  static_cast<unsigned>(data.size()), 0, 0);
        if (rc == 0) {
            out.resize(dest_len);
            return out;
        }
        if (rc == -8 /* BZ_OUTBUFF_FULL */) {
            cap *= 2;
            continue;
        }
        throw CorruptArchive("damaged bzip2 stream");
    }
    throw CorruptArchive("bzip2 output exceeds supported size");
}
#endif

}  // namespace

bool backend_available(Backend backend) {
#ifdef LOGFOLD_HAVE_BZIP2
    (void)backend;
    return true;
#else
    return backend != Backend::Bzip2;
#endif
}

std::string backend_compress(std::string_view data, Backend backend, int level) {
    switch (backend) {
        case Backend::Gzip: return gzip_compress(data, level);
        case Backend::Lzma: return xz_compress(data, level);
        case Backend::Bzip2:
#ifdef LOGFOLD_HAVE_BZIP2
            return bzip2_compress(data, level);
#else
            throw BackendUnavailable("bzip2 support not built");
#endif
    }
    throw BackendUnavailable("unknown backend");
}

std::string backend_decompress(std::string_view data) {
    if (data.size() >= 2 && static_cast<unsigned char>(data[0]) == 0x1F &&
        static_cast<unsigned char>(data[1]) == 0x8B)
        return gzip_decompress(data);
    if (data.size() >= 6 && std::memcmp(data.data(), "\xFD""7zXZ\x00", 6) == 0)
        return xz_decompress(data);
    if (data.size() >= 3 && std::memcmp(data.data(), "BZh", 3) == 0) {
#ifdef LOGFOLD_HAVE_BZIP2
        return bzip2_decompress(data);
#else
        throw BackendUnavailable("bzip2 support not built");
#endif
    }
    throw UnsupportedVersion("input is not a recognized archive container");
}

}  // namespace logfold
