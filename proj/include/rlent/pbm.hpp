#pragma once

#include <string>
#include <string_view>

#include "rlent/image.hpp"

namespace rlent {

enum class PbmVariant { P1, P4 };

// Parse a PBM stream, ASCII (P1) or packed (P4). Comments (# to end of line)
// are accepted in the header. Throws ParseError with a byte offset on
// malformed input.
BinaryImage load_pbm(std::string_view bytes);

// Serialize to PBM. load_pbm(save_pbm(img, v)) == img for both variants.
std::string save_pbm(const BinaryImage& img, PbmVariant variant);

} // namespace rlent
