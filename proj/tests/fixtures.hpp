#pragma once

#include <random>

#include "rlent/image.hpp"
#include "rlent/rle.hpp"

namespace rlent::testing {

// The 13-line, 14-pixel-wide reference document, in canonical (unpadded)
// run columns.
inline RLEDocument reference_document() {
    const std::vector<std::vector<std::uint32_t>> runs = {
        {14},           {2, 2, 4, 5, 1}, {1, 4, 3, 5, 1}, {1, 4, 3, 5, 1},
        {1, 4, 3, 5, 1}, {2, 2, 10},     {0, 1, 13},      {0, 1, 13},
        {2, 1, 4, 5, 2}, {1, 3, 3, 5, 2}, {1, 4, 2, 5, 2}, {1, 5, 8},
        {14},
    };
    RLEDocument doc;
    doc.width = 14;
    doc.height = static_cast<std::uint32_t>(runs.size());
    for (const auto& r : runs)
        doc.rows.push_back({r, doc.width});
    return doc;
}

inline BinaryImage random_image(std::mt19937& rng, std::int32_t width,
                                std::int32_t height, double density = 0.5) {
    std::bernoulli_distribution ink(density);
    BinaryImage img(width, height);
    for (std::int32_t r = 0; r < height; ++r)
        for (std::int32_t c = 0; c < width; ++c)
            if (ink(rng)) img.set(r, c, 1);
    return img;
}

// Enumerates every bit pattern of the given width as a single row image.
inline BinaryImage image_from_pattern(std::uint32_t pattern, std::int32_t width,
                                      std::int32_t height = 1) {
    BinaryImage img(width, height);
    for (std::int32_t c = 0; c < width; ++c)
        img.set(0, c, (pattern >> c) & 1);
    return img;
}

} // namespace rlent::testing
