#include "rlent/image.hpp"

#include "rlent/errors.hpp"

namespace rlent {

BinaryImage::BinaryImage(std::int32_t width, std::int32_t height)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * height, 0) {
    if (width < 1 || height < 1)
        throw ValidationError("image dimensions must be >= 1");
}

BinaryImage::BinaryImage(std::int32_t width, std::int32_t height,
                         std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1)
        throw ValidationError("image dimensions must be >= 1");
    if (pixels_.size() != static_cast<std::size_t>(width) * height)
        throw ValidationError("pixel count does not match width * height");
    for (auto p : pixels_)
        if (p > 1) throw ValidationError("pixel values must be 0 or 1");
}

BinaryImage BinaryImage::transposed() const {
    BinaryImage out(height_, width_);
    for (std::int32_t r = 0; r < height_; ++r)
        for (std::int32_t c = 0; c < width_; ++c)
            out.set(c, r, at(r, c));
    return out;
}

BinaryImage from_ascii_art(const std::vector<std::string>& lines, char ink) {
    if (lines.empty() || lines.front().empty())
        throw ValidationError("ascii art needs at least one non-empty line");
    const std::size_t w = lines.front().size();
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].size() != w)
            throw ValidationError("ascii art line " + std::to_string(i) +
                                  " has length " + std::to_string(lines[i].size()) +
                                  ", expected " + std::to_string(w));
    BinaryImage img(static_cast<std::int32_t>(w),
                    static_cast<std::int32_t>(lines.size()));
    for (std::size_t r = 0; r < lines.size(); ++r)
        for (std::size_t c = 0; c < w; ++c)
            if (lines[r][c] == ink)
                img.set(static_cast<std::int32_t>(r), static_cast<std::int32_t>(c), 1);
    return img;
}

} // namespace rlent
