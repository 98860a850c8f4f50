#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlent/rle.hpp"

namespace rlent {

// Transitions of one scan line. Positions are 1-based indices of the pixel
// after the change; a leading ink pixel counts as a 0->1 transition at
// position 1 (implicit leading background), a trailing ink pixel generates
// no 1->0 transition.
struct LineTransitions {
    std::uint32_t count01 = 0;
    std::uint32_t count10 = 0;
    std::vector<std::uint32_t> pos01;
    std::vector<std::uint32_t> pos10;

    bool operator==(const LineTransitions&) const = default;
};

// Counts only: count01 = nonzero even-indexed run columns, count10 =
// nonzero odd-indexed run columns excluding the first. Columns are 1-based
// as in the compressed-table layout.
std::pair<std::uint32_t, std::uint32_t> count_transitions(const RLERow& row);

// Counts plus positions. The position of the transition at run column c is
// the sum of the runs of all previous columns plus one.
LineTransitions transition_positions(const RLERow& row);

// Streams the document column by column without materializing the image.
// Each pass pops one pixel off every row: the leading run is decremented
// and the emitted bit is the parity of its run column (odd column -> 0,
// even -> 1). When the two leading entries of a row are both zero the
// cursor shifts two columns right before popping (shift-pop).
class VirtualDecompressor {
public:
    explicit VirtualDecompressor(const RLEDocument& doc);

    std::uint32_t width() const { return width_; }
    std::uint32_t height() const { return height_; }
    std::uint32_t passes_done() const { return pass_; }
    bool done() const { return pass_ >= width_; }

    // Emits one column (height bits, top to bottom). Returns false when all
    // n passes have been performed.
    bool next_pass(std::vector<std::uint8_t>& column_out);

private:
    friend std::vector<struct TraceRecord> virtual_decompress_trace(const RLEDocument&,
                                                                    std::uint32_t);
    struct RowState {
        std::vector<std::uint32_t> runs;
        std::size_t cursor = 0;
    };
    std::vector<RowState> rows_;
    std::uint32_t width_ = 0;
    std::uint32_t height_ = 0;
    std::uint32_t pass_ = 0;
};

// One pop event of a traced virtual decompression.
struct TraceRecord {
    std::uint32_t pass = 0;   // 1-based
    std::uint32_t line = 0;   // 1-based row number
    std::uint8_t bit = 0;
    std::vector<std::uint32_t> remaining; // post-pop runs, from the cursor on
    bool shift_pop = false;
};

std::vector<TraceRecord> virtual_decompress_trace(const RLEDocument& doc,
                                                  std::uint32_t max_passes);

// Full column-major pixel stream (pass after pass), length width * height.
std::vector<std::uint8_t> virtual_decompress(const RLEDocument& doc);

// Per-column transitions collected from the virtual-decompression stream.
// Positions are 1-based row indices within the column, in [1, height].
std::vector<LineTransitions> column_transition_sets(const RLEDocument& doc);

} // namespace rlent
