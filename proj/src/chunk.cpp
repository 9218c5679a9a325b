#include "logfold/chunk.hpp"

namespace logfold {

std::vector<LogChunk> chunk_input(std::string_view data, const Config& cfg) {
    std::vector<LogChunk> chunks;
    if (data.empty()) return chunks;

    LogChunk current;
    current.index = 0;
    std::size_t pos = 0;
    while (pos <= data.size()) {
        if (pos == data.size()) break;
        const std::size_t nl = data.find('\n', pos);
        const bool terminated = nl != std::string_view::npos;
        const std::size_t end = terminated ? nl : data.size();
        current.lines.emplace_back(data.substr(pos, end - pos));
        if (!terminated) {
            current.last_line_terminated = false;
            pos = data.size();
        } else {
            pos = nl + 1;
        }
        if (current.lines.size() == cfg.chunk_lines) {
            const std::size_t next_index = current.index + 1;
            chunks.push_back(std::move(current));
            current = LogChunk{};
            current.index = next_index;
        }
    }
    if (!current.lines.empty()) chunks.push_back(std::move(current));
    return chunks;
}

std::string reassemble(const std::vector<LogChunk>& chunks) {
    std::string out;
    std::size_t total = 0;
    for (const auto& c : chunks)
        for (const auto& l : c.lines) total += l.size() + 1;
    out.reserve(total);
    for (const auto& c : chunks) {
        for (std::size_t i = 0; i < c.lines.size(); ++i) {
            out += c.lines[i];
            if (i + 1 < c.lines.size() || c.last_line_terminated) out += '\n';
        }
    }
    return out;
}

}  // namespace logfold
