#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rlent/image.hpp"
#include "rlent/rle.hpp"

namespace rlent {

enum class Quantifier { CEQ, SEQ };
enum class Direction { Horizontal, Vertical };
enum class LogBase { E, Two, Ten };

double apply_log(double x, LogBase base);

// Order-insensitive total: values are accumulated in ascending value order,
// so any permutation of the same contributions produces the identical
// double. Line totals use this, which is what makes "CEQ is unchanged
// under row permutation" hold exactly rather than to an ulp.
double stable_sum(std::span<const double> values);

struct EntropyFeatures {
    Quantifier quantifier = Quantifier::CEQ;
    Direction direction = Direction::Horizontal;
    LogBase log_base = LogBase::E;
    double f1 = 0.0; // E+ total
    double f2 = 0.0; // E- total
    double f3 = 0.0; // f1 + f2
    // One (E+, E-) pair per scan line (row for horizontal, column for vertical).
    std::vector<std::pair<double, double>> per_line;
};

// Binary entropy of the transition probability p = count / n, with the
// 0 * log(1/0) := 0 convention (applied at both p = 0 and p = 1).
// count must be <= n.
double ceq_row(std::uint32_t count, std::uint32_t n, LogBase base = LogBase::E);

// Positional entropy kernel for a single transition at 1-based position pos
// of line alpha:  (alpha/m) * ((pos/n) * log(n/pos)
//                              + (m - pos/n) * log(m/(m+n-pos))).
// The second term can be negative; the kernel is kept verbatim and isolated
// here so an alternative reading swaps in one place.
double seq_kernel(std::uint32_t pos, std::uint32_t alpha, std::uint32_t m,
                  std::uint32_t n, LogBase base);

// (E+, E-) of one line: one kernel term per transition position.
std::pair<double, double> seq_row(std::span<const std::uint32_t> pos01,
                                  std::span<const std::uint32_t> pos10,
                                  std::uint32_t alpha, std::uint32_t m,
                                  std::uint32_t n, LogBase base = LogBase::E);

// Compressed-domain quantifiers. Horizontal works straight off the run
// columns; vertical consumes the virtual-decompression column stream.
EntropyFeatures ceq_horizontal(const RLEDocument& doc, LogBase base = LogBase::E);
EntropyFeatures seq_horizontal(const RLEDocument& doc, LogBase base = LogBase::E);
EntropyFeatures ceq_vertical(const RLEDocument& doc, LogBase base = LogBase::E);
EntropyFeatures seq_vertical(const RLEDocument& doc, LogBase base = LogBase::E);

EntropyFeatures compute_entropy(const RLEDocument& doc, Quantifier q, Direction d,
                                LogBase base = LogBase::E);

// Uncompressed-domain oracle: transitions found by direct adjacent-pixel
// scan over the image, same kernels. Independent of the run-length path.
EntropyFeatures oracle_entropy(const BinaryImage& img, Quantifier q, Direction d,
                               LogBase base = LogBase::E);

// Pixel-scan transition extraction used by the oracle (also handy for
// cross-checking the compressed extraction in tests).
std::vector<std::uint32_t> scan_positions_01(std::span<const std::uint8_t> bits);
std::vector<std::uint32_t> scan_positions_10(std::span<const std::uint8_t> bits);

std::string to_string(Quantifier q);
std::string to_string(Direction d);
std::string to_string(LogBase b);

} // namespace rlent
