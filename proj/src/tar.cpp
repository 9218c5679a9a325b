#include "logfold/tar.hpp"

#include <array>
#include <cstdio>
#include <cstring>

#include "logfold/errors.hpp"

namespace logfold {

namespace {

constexpr std::size_t kBlock = 512;

void write_octal(char* field, std::size_t width, std::uint64_t value) {
    // width includes the trailing NUL.
    std::snprintf(field, width, "%0*llo", static_cast<int>(width - 1),
                  static_cast<unsigned long long>(value));
}

std::uint64_t read_octal(const char* field, std::size_t width) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
        const char c = field[i];
        if (c == '\0' || c == ' ') break;
        if (c < '0' || c > '7') throw CorruptArchive("bad octal field in tar header");
        v = v * 8 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

}  // namespace

void TarWriter::add(std::string_view name, std::string_view content) {
    if (name.size() > 99) throw IoFailure("tar member name too long: " + std::string(name));

    std::array<char, kBlock> h{};
    std::memcpy(h.data(), name.data(), name.size());
    write_octal(h.data() + 100, 8, 0644);  // mode
    write_octal(h.data() + 108, 8, 0);     // uid
    write_octal(h.data() + 116, 8, 0);     // gid
    write_octal(h.data() + 124, 12, content.size());
    write_octal(h.data() + 136, 12, 0);    // mtime
    std::memset(h.data() + 148, ' ', 8);   // checksum placeholder
    h[156] = '0';                          // regular file
    std::memcpy(h.data() + 257, "ustar", 6);
    std::memcpy(h.data() + 263, "00", 2);

    unsigned sum = 0;
    for (const char c : h) sum += static_cast<unsigned char>(c);
    std::snprintf(h.data() + 148, 7, "%06o", sum);
    h[155] = ' ';

    buf_.append(h.data(), kBlock);
    buf_.append(content);
    const std::size_t pad = (kBlock - content.size() % kBlock) % kBlock;
    buf_.append(pad, '\0');
}

std::string TarWriter::finish() {
    buf_.append(2 * kBlock, '\0');
    return std::move(buf_);
}

std::vector<TarMember> tar_read(std::string_view data) {
    std::vector<TarMember> members;
    std::size_t pos = 0;
    while (pos + kBlock <= data.size()) {
        const char* h = data.data() + pos;
        bool all_zero = true;
        for (std::size_t i = 0; i < kBlock && all_zero; ++i) all_zero = h[i] == '\0';
        if (all_zero) return members;  // end-of-archive marker

        unsigned expected = static_cast<unsigned>(read_octal(h + 148, 8));
        unsigned sum = 0;
        for (std::size_t i = 0; i < kBlock; ++i)
            sum += (i >= 148 && i < 156) ? ' ' : static_cast<unsigned char>(h[i]);
        if (sum != expected) throw CorruptArchive("tar header checksum mismatch");

        std::size_t name_len = 0;
        while (name_len < 100 && h[name_len] != '\0') ++name_len;
        const std::uint64_t size = read_octal(h + 124, 12);

        pos += kBlock;
        if (pos + size > data.size()) throw CorruptArchive("tar member truncated");
        members.push_back({std::string(h, name_len), std::string(data.substr(pos, size))});
        pos += size + (kBlock - size % kBlock) % kBlock;
    }
    throw CorruptArchive("tar stream ended without end-of-archive marker");
}

}  // namespace logfold
