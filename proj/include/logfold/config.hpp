#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace logfold {

enum class Backend : std::uint8_t { Gzip = 0, Bzip2 = 1, Lzma = 2 };

enum class TokenStrategy : std::uint8_t {
    Num = 0,
    NumPath = 1,
    NumClasspath = 2,
    All = 3,
};

const char* to_string(Backend b);
const char* to_string(TokenStrategy s);
Backend backend_from_string(const std::string& s);
TokenStrategy strategy_from_string(const std::string& s);

struct Config {
    std::size_t chunk_lines = 100000;
    std::uint32_t theta_rv = 40;       // max representative values for validation
    double phi_d = 0.6;                // dominance ratio threshold
    std::uint32_t zeta_uv = 3;         // full vs partial re-grouping cut-off
    Backend backend = Backend::Lzma;
    int backend_level = 0;             // 0 selects the backend's own default
    TokenStrategy token_strategy = TokenStrategy::NumPath;
    std::uint32_t max_mining_depth = 5;
    bool disable_processor = false;
    bool disable_hybrid_encoder = false;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

Config default_config();

}  // namespace logfold
