#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rlent {

// Dense row-major bilevel image. 0 = background/white, 1 = foreground/ink.
class BinaryImage {
public:
    BinaryImage(std::int32_t width, std::int32_t height);
    BinaryImage(std::int32_t width, std::int32_t height, std::vector<std::uint8_t> pixels);

    std::int32_t width() const { return width_; }
    std::int32_t height() const { return height_; }

    std::uint8_t at(std::int32_t row, std::int32_t col) const {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }
    void set(std::int32_t row, std::int32_t col, std::uint8_t v) {
        pixels_[static_cast<std::size_t>(row) * width_ + col] = v;
    }

    const std::uint8_t* row(std::int32_t r) const {
        return pixels_.data() + static_cast<std::size_t>(r) * width_;
    }
    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    BinaryImage transposed() const;

    bool operator==(const BinaryImage&) const = default;

private:
    std::int32_t width_;
    std::int32_t height_;
    std::vector<std::uint8_t> pixels_;
};

// Build an image from text rows: `ink` maps to 1, anything else to 0.
// All lines must have equal, nonzero length.
BinaryImage from_ascii_art(const std::vector<std::string>& lines, char ink = '1');

} // namespace rlent
