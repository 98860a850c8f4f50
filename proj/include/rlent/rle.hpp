#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlent/image.hpp"

namespace rlent {

// One row of run-length data. Runs alternate starting with the 0-run:
// odd positions (1st, 3rd, ...) count background pixels, even positions
// count ink pixels. Canonical form: only the first run may be zero, the
// last run is never zero, and the runs sum to the row width.
struct RLERow {
    std::vector<std::uint32_t> runs;
    std::uint32_t width = 0;

    bool operator==(const RLERow&) const = default;
};

struct RLEDocument {
    std::vector<RLERow> rows;
    std::uint32_t width = 0;
    std::uint32_t height = 0;

    bool operator==(const RLEDocument&) const = default;
};

// Throws ValidationError (naming the run index) if the row is not canonical.
void validate_row(const RLERow& row);
void validate_document(const RLEDocument& doc);

RLERow encode_row(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> decode_row(const RLERow& row);

RLEDocument encode_image(const BinaryImage& img);
BinaryImage decode_image(const RLEDocument& doc);

struct CompressionStats {
    std::size_t max_k = 0;      // longest stored run sequence
    double mean_k = 0.0;
    double ratio = 0.0;         // (m*n) / total stored runs
};
CompressionStats compression_stats(const RLEDocument& doc);

// ".rld" on-disk format: line "RLD1 <width> <height>", then one line per
// row of space-separated decimal runs in canonical form.
std::string write_rld(const RLEDocument& doc);
RLEDocument read_rld(std::string_view text);

} // namespace rlent
