#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logfold {

/// Minimal deterministic ustar writer/reader. Members are regular files with
/// zeroed timestamps, uid/gid 0, and mode 0644, so identical inputs always
/// produce identical bytes.
class TarWriter {
public:
    void add(std::string_view name, std::string_view content);
    std::string finish();

private:
    std::string buf_;
};

struct TarMember {
    std::string name;
    std::string content;
};

/// Throws CorruptArchive on malformed headers or truncated content.
std::vector<TarMember> tar_read(std::string_view data);

}  // namespace logfold
