#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logfold/config.hpp"

namespace logfold {

/// A fixed-size window of raw lines, compressed independently of all others.
/// Lines are split on LF; CR stays inside the line body. Only the final line
/// of the final chunk may lack a terminator.
struct LogChunk {
    std::size_t index = 0;
    std::vector<std::string> lines;
    bool last_line_terminated = true;
};

std::vector<LogChunk> chunk_input(std::string_view data, const Config& cfg);

/// Inverse of chunk_input; used by tests and the decompressor.
std::string reassemble(const std::vector<LogChunk>& chunks);

}  // namespace logfold
