#include "rlent/entropy.hpp"

namespace rlent {

// Uncompressed-domain reference path. Transitions come from a direct
// adjacent-pixel scan; nothing here touches the run-length representation.

std::vector<std::uint32_t> scan_positions_01(std::span<const std::uint8_t> bits) {
    std::vector<std::uint32_t> pos;
    std::uint8_t prev = 0; // implicit leading background
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 1 && prev == 0)
            pos.push_back(static_cast<std::uint32_t>(i + 1));
        prev = bits[i];
    }
    return pos;
}

std::vector<std::uint32_t> scan_positions_10(std::span<const std::uint8_t> bits) {
    std::vector<std::uint32_t> pos;
    std::uint8_t prev = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 0 && prev == 1)
            pos.push_back(static_cast<std::uint32_t>(i + 1));
        prev = bits[i];
    }
    return pos;
}

namespace {

// Counting-only scan for CEQ; avoids building position lists.
std::pair<std::uint32_t, std::uint32_t> scan_counts(
    std::span<const std::uint8_t> bits) {
    std::uint32_t c01 = 0, c10 = 0;
    std::uint8_t prev = 0;
    for (std::uint8_t b : bits) {
        c01 += (b == 1 && prev == 0);
        c10 += (b == 0 && prev == 1);
        prev = b;
    }
    return {c01, c10};
}

std::vector<std::uint8_t> column_of(const BinaryImage& img, std::int32_t c) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(img.height()));
    for (std::int32_t r = 0; r < img.height(); ++r)
        bits[static_cast<std::size_t>(r)] = img.at(r, c);
    return bits;
}

} // namespace

EntropyFeatures oracle_entropy(const BinaryImage& img, Quantifier q, Direction d,
                               LogBase base) {
    // A line of length `len`; `alpha` runs over `line_count` lines.
    const bool horizontal = d == Direction::Horizontal;
    const std::uint32_t line_count =
        static_cast<std::uint32_t>(horizontal ? img.height() : img.width());
    const std::uint32_t len =
        static_cast<std::uint32_t>(horizontal ? img.width() : img.height());

    EntropyFeatures f;
    f.quantifier = q;
    f.direction = d;
    f.log_base = base;
    f.per_line.reserve(line_count);
    std::vector<double> eplus, eminus;
    std::vector<std::uint8_t> column;
    for (std::uint32_t alpha = 1; alpha <= line_count; ++alpha) {
        std::span<const std::uint8_t> line;
        if (horizontal) {
            line = {img.row(static_cast<std::int32_t>(alpha - 1)),
                    static_cast<std::size_t>(img.width())};
        } else {
            column = column_of(img, static_cast<std::int32_t>(alpha - 1));
            line = column;
        }
        std::pair<double, double> contrib;
        if (q == Quantifier::CEQ) {
            const auto [c01, c10] = scan_counts(line);
            contrib = {ceq_row(c01, len, base), ceq_row(c10, len, base)};
        } else {
            contrib = seq_row(scan_positions_01(line), scan_positions_10(line),
                              alpha, line_count, len, base);
        }
        eplus.push_back(contrib.first);
        eminus.push_back(contrib.second);
        f.per_line.push_back(contrib);
    }
    f.f1 = stable_sum(eplus);
    f.f2 = stable_sum(eminus);
    f.f3 = f.f1 + f.f2;
    return f;
}

} // namespace rlent
