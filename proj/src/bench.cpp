#include "logfold/bench.hpp"

#include <chrono>

#include "logfold/backend.hpp"
#include "logfold/compressor.hpp"

namespace logfold {

namespace {
using Clock = std::chrono::steady_clock;

double safe_div(double num, double den) { return den > 0 ? num / den : 0.0; }
}  // namespace

double BenchResult::cr() const {
    return safe_div(static_cast<double>(original_size), static_cast<double>(compressed_size));
}

double BenchResult::cs_bytes_per_sec() const {
    return safe_div(static_cast<double>(original_size), compress_seconds);
}

double BenchResult::ds_bytes_per_sec() const {
    return safe_div(static_cast<double>(original_size), decompress_seconds);
}

BenchResult bench_run(std::string_view input, const Config& cfg, bool parallel) {
    BenchResult r;
    r.original_size = input.size();

    const auto c0 = Clock::now();
    const std::string archive = compress(input, cfg, parallel);
    r.compress_seconds = std::chrono::duration<double>(Clock::now() - c0).count();
    r.compressed_size = archive.size();

    const auto d0 = Clock::now();
    const std::string restored = decompress(archive, parallel);
    r.decompress_seconds = std::chrono::duration<double>(Clock::now() - d0).count();
    r.verified = restored == input;
    return r;
}

double bare_backend_cr(std::string_view input, Backend backend, int level) {
    const std::string compressed = backend_compress(input, backend, level);
    return safe_div(static_cast<double>(input.size()), static_cast<double>(compressed.size()));
}

}  // namespace logfold
