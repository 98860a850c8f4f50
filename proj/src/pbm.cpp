#include "rlent/pbm.hpp"

#include <cctype>
#include <cstdint>

#include "rlent/errors.hpp"

namespace rlent {
namespace {

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
    throw ParseError("pbm: " + what + " at byte " + std::to_string(offset));
}

// Skips whitespace and '#' comments. Comments run to end of line.
void skip_space_and_comments(std::string_view s, std::size_t& i) {
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        } else if (s[i] == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
        } else {
            break;
        }
    }
}

std::int32_t parse_dimension(std::string_view s, std::size_t& i, const char* name) {
    skip_space_and_comments(s, i);
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        fail(i, std::string("expected ") + name);
    const std::size_t start = i;
    std::int64_t value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        value = value * 10 + (s[i] - '0');
        if (value > INT32_MAX)
            fail(start, std::string(name) + " exceeds 2^31-1");
        ++i;
    }
    if (value < 1)
        fail(start, std::string(name) + " must be >= 1");
    return static_cast<std::int32_t>(value);
}

} // namespace

BinaryImage load_pbm(std::string_view bytes) {
    std::size_t i = 0;
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4'))
        fail(0, "bad magic number, expected P1 or P4");
    const bool packed = bytes[1] == '4';
    i = 2;

    const std::int32_t width = parse_dimension(bytes, i, "width");
    const std::int32_t height = parse_dimension(bytes, i, "height");

    BinaryImage img(width, height);
    if (packed) {
        if (i >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[i])))
            fail(i, "expected single whitespace before P4 payload");
        ++i;
        const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
        for (std::int32_t r = 0; r < height; ++r) {
            if (i + row_bytes > bytes.size())
                fail(bytes.size(), "truncated P4 payload (row " + std::to_string(r) + ")");
            for (std::int32_t c = 0; c < width; ++c) {
                const unsigned char byte = bytes[i + c / 8];
                img.set(r, c, (byte >> (7 - c % 8)) & 1);
            }
            i += row_bytes; // trailing pad bits of the row are discarded
        }
    } else {
        for (std::int32_t r = 0; r < height; ++r) {
            for (std::int32_t c = 0; c < width; ++c) {
                skip_space_and_comments(bytes, i);
                if (i >= bytes.size())
                    fail(bytes.size(), "truncated P1 payload");
                if (bytes[i] != '0' && bytes[i] != '1')
                    fail(i, "expected '0' or '1'");
                img.set(r, c, bytes[i] == '1');
                ++i;
            }
        }
    }
    return img;
}

std::string save_pbm(const BinaryImage& img, PbmVariant variant) {
    std::string out;
    out += variant == PbmVariant::P1 ? "P1\n" : "P4\n";
    out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
    if (variant == PbmVariant::P1) {
        for (std::int32_t r = 0; r < img.height(); ++r) {
            for (std::int32_t c = 0; c < img.width(); ++c) {
                if (c) out += ' ';
                out += img.at(r, c) ? '1' : '0';
            }
            out += '\n';
        }
    } else {
        const std::size_t row_bytes = (static_cast<std::size_t>(img.width()) + 7) / 8;
        for (std::int32_t r = 0; r < img.height(); ++r) {
            std::string row(row_bytes, '\0');
            for (std::int32_t c = 0; c < img.width(); ++c)
                if (img.at(r, c))
                    row[c / 8] |= static_cast<char>(1 << (7 - c % 8));
            out += row;
        }
    }
    return out;
}

} // namespace rlent
