#pragma once

#include <cstdint>
#include <string>

#include "rlent/entropy.hpp"
#include "rlent/image.hpp"
#include "rlent/rle.hpp"

namespace rlent {

enum class FixtureKind { Blank, Checkerboard, TextLike };

// Deterministic under a fixed seed. TextLike lays random horizontal ink
// runs at roughly the requested density.
BinaryImage generate_fixture(FixtureKind kind, std::int32_t width,
                             std::int32_t height, double density = 0.1,
                             std::uint64_t seed = 42);

struct BenchReport {
    std::string label;
    Quantifier quantifier = Quantifier::CEQ;
    Direction direction = Direction::Horizontal;
    double t_compressed = 0.0;   // seconds, median over repetitions
    double t_uncompressed = 0.0;
    double ratio = 0.0;          // t_uncompressed / t_compressed
    int repetitions = 0;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    double compression_ratio = 0.0;
    bool include_decode = false;
    bool reliable = true;        // false when the timer is too coarse
};

// Times the compressed-domain quantifier against the pixel-scan oracle on
// the decoded image. Both paths are verified to agree on F3 before any
// time is reported. With include_decode the uncompressed side is charged
// the decode step as well (the end-to-end framing); by default both paths
// start from in-memory inputs.
BenchReport bench(const RLEDocument& doc, const std::string& label, Quantifier q,
                  Direction d, int repetitions, LogBase base = LogBase::E,
                  bool include_decode = false);

} // namespace rlent
