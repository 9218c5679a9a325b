#include "logfold/config.hpp"

#include <stdexcept>

namespace logfold {

const char* to_string(Backend b) {
    switch (b) {
        case Backend::Gzip: return "gzip";
        case Backend::Bzip2: return "bzip2";
        case Backend::Lzma: return "lzma";
    }
    return "?";
}

const char* to_string(TokenStrategy s) {
    switch (s) {
        case TokenStrategy::Num: return "num";
        case TokenStrategy::NumPath: return "num_path";
        case TokenStrategy::NumClasspath: return "num_classpath";
        case TokenStrategy::All: return "all";
    }
    return "?";
}

Backend backend_from_string(const std::string& s) {
    if (s == "gzip") return Backend::Gzip;
    if (s == "bzip2") return Backend::Bzip2;
    if (s == "lzma") return Backend::Lzma;
    throw std::invalid_argument("unknown backend: " + s);
}

TokenStrategy strategy_from_string(const std::string& s) {
    if (s == "num") return TokenStrategy::Num;
    if (s == "num_path") return TokenStrategy::NumPath;
    if (s == "num_classpath") return TokenStrategy::NumClasspath;
    if (s == "all") return TokenStrategy::All;
    throw std::invalid_argument("unknown token strategy: " + s);
}

void Config::validate() const {
    if (chunk_lines < 1) throw std::invalid_argument("chunk_lines must be >= 1");
    if (theta_rv < 1) throw std::invalid_argument("theta_rv must be >= 1");
    if (!(phi_d > 0.0 && phi_d <= 1.0)) throw std::invalid_argument("phi_d must be in (0,1]");
    if (zeta_uv < 1) throw std::invalid_argument("zeta_uv must be >= 1");
    if (backend_level < 0 || backend_level > 9)
        throw std::invalid_argument("backend_level must be 0 (default) or 1..9");
    if (max_mining_depth < 1) throw std::invalid_argument("max_mining_depth must be >= 1");
}

Config default_config() {
    return Config{};
}

}  // namespace logfold
