#include "rlent/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "rlent/errors.hpp"

namespace rlent {

BinaryImage generate_fixture(FixtureKind kind, std::int32_t width,
                             std::int32_t height, double density,
                             std::uint64_t seed) {
    if (width < 1 || height < 1)
        throw ValidationError("fixture dimensions must be >= 1");
    if (density < 0.0 || density > 1.0)
        throw ValidationError("density must be in [0, 1]");

    BinaryImage img(width, height);
    switch (kind) {
        case FixtureKind::Blank:
            break;
        case FixtureKind::Checkerboard:
            for (std::int32_t r = 0; r < height; ++r)
                for (std::int32_t c = 0; c < width; ++c)
                    img.set(r, c, static_cast<std::uint8_t>((r + c) % 2));
            break;
        case FixtureKind::TextLike: {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<int> ink_len(2, 8); // mean 5
            const double mean_gap =
                density > 0.0 ? 5.0 * (1.0 - density) / density : 0.0;
            for (std::int32_t r = 0; r < height; ++r) {
                std::int32_t c = 0;
                while (c < width && density > 0.0) {
                    std::uniform_int_distribution<int> gap_len(
                        1, std::max(1, static_cast<int>(2.0 * mean_gap)));
                    c += gap_len(rng);
                    const std::int32_t end =
                        std::min<std::int32_t>(width, c + ink_len(rng));
                    for (; c < end; ++c)
                        img.set(r, c, 1);
                }
            }
            break;
        }
    }
    return img;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Smallest observable nonzero interval of the clock, in seconds.
double timer_resolution() {
    double best = 1.0;
    for (int i = 0; i < 16; ++i) {
        auto t0 = Clock::now();
        auto t1 = Clock::now();
        while (t1 == t0) t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

volatile double g_bench_sink; // keeps the timed loops observable

} // namespace

BenchReport bench(const RLEDocument& doc, const std::string& label, Quantifier q,
                  Direction d, int repetitions, LogBase base, bool include_decode) {
    if (repetitions < 3)
        throw ValidationError("repetitions must be >= 3");
    validate_document(doc);
    const BinaryImage img = decode_image(doc);

    // A bench run doubles as an equivalence test.
    const double f3c = compute_entropy(doc, q, d, base).f3;
    const double f3u = oracle_entropy(img, q, d, base).f3;
    const double scale = std::max({std::abs(f3c), std::abs(f3u), 1.0});
    if (std::abs(f3c - f3u) > 1e-12 * scale)
        throw ValidationError("compressed and uncompressed paths disagree: " +
                              std::to_string(f3c) + " vs " + std::to_string(f3u));

    double sink = 0.0;
    // warm-up, excluded from stats
    sink += compute_entropy(doc, q, d, base).f3;
    sink += oracle_entropy(img, q, d, base).f3;

    std::vector<double> tc, tu;
    tc.reserve(repetitions);
    tu.reserve(repetitions);
    for (int i = 0; i < repetitions; ++i) {
        auto t0 = Clock::now();
        sink += compute_entropy(doc, q, d, base).f3;
        tc.push_back(seconds_since(t0));

        t0 = Clock::now();
        if (include_decode) {
            const BinaryImage decoded = decode_image(doc);
            sink += oracle_entropy(decoded, q, d, base).f3;
        } else {
            sink += oracle_entropy(img, q, d, base).f3;
        }
        tu.push_back(seconds_since(t0));
    }
    g_bench_sink = sink;

    BenchReport r;
    r.label = label;
    r.quantifier = q;
    r.direction = d;
    r.t_compressed = median(tc);
    r.t_uncompressed = median(tu);
    r.ratio = r.t_uncompressed / r.t_compressed;
    r.repetitions = repetitions;
    r.width = doc.width;
    r.height = doc.height;
    r.compression_ratio = compression_stats(doc).ratio;
    r.include_decode = include_decode;
    const double res = timer_resolution();
    r.reliable = std::min(r.t_compressed, r.t_uncompressed) >= 10.0 * res;
    return r;
}

} // namespace rlent
