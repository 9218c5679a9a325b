#pragma once

#include <string>
#include <string_view>

#include "logfold/config.hpp"

namespace logfold {

/// Compresses with the selected backend's standard container format
/// (gzip member / bzip2 stream / xz stream), so third-party tools can peel
/// the outer layer. level 0 selects the backend's own default.
std::string backend_compress(std::string_view data, Backend backend, int level);

/// Detects the container by magic bytes and decompresses.
/// Throws CorruptArchive on unrecognized or damaged input,
/// BackendUnavailable if the required library is not linked.
std::string backend_decompress(std::string_view data);

bool backend_available(Backend backend);

}  // namespace logfold
