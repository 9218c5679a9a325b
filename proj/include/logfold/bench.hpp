#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "logfold/config.hpp"

namespace logfold {

/// One benchmark measurement for a single input under one configuration.
/// Ratios and speeds use the byte counts the archive actually occupies.
struct BenchResult {
    std::size_t original_size = 0;
    std::size_t compressed_size = 0;
    double compress_seconds = 0.0;    // full pipeline including the backend
    double decompress_seconds = 0.0;
    bool verified = false;            // round trip byte-identical

    double cr() const;                // original / compressed
    double cs_bytes_per_sec() const;  // original / compress time
    double ds_bytes_per_sec() const;  // original / decompress time
};

/// Compress + decompress + byte-compare, with wall-clock timing.
BenchResult bench_run(std::string_view input, const Config& cfg, bool parallel = false);

/// Ratio achieved by the bare backend on the raw bytes (no LogFold front end).
double bare_backend_cr(std::string_view input, Backend backend, int level);

}  // namespace logfold
