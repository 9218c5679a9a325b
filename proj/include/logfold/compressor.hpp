#pragma once

#include <string>
#include <string_view>

#include "logfold/config.hpp"
#include "logfold/encoder.hpp"

namespace logfold {

/// Full pipeline: chunk -> analyze -> group -> mine -> encode -> pack.
/// When `parallel` is true chunks are encoded on a thread pool; the archive
/// bytes are identical either way.
std::string compress(std::string_view input, const Config& cfg, bool parallel = false);

/// Exact inverse of compress for any archive it produced.
std::string decompress(std::string_view archive, bool parallel = false);

/// Decompresses while attributing wall time to the eight pipeline steps.
std::string decompress_profiled(std::string_view archive, DecompressProfile& profile);

}  // namespace logfold
