#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rlent/errors.hpp"
#include "rlent/rle.hpp"

using namespace rlent;

namespace {

std::vector<std::uint8_t> bits_of(const std::string& s) {
    std::vector<std::uint8_t> v;
    for (char c : s) v.push_back(c == '1');
    return v;
}

} // namespace

TEST_CASE("encode_row reference rows") {
    CHECK(encode_row(bits_of("00000000000000")).runs ==
          std::vector<std::uint32_t>{14});
    CHECK(encode_row(bits_of("00110000111110")).runs ==
          std::vector<std::uint32_t>{2, 2, 4, 5, 1});
    CHECK(encode_row(bits_of("10000000000000")).runs ==
          std::vector<std::uint32_t>{0, 1, 13});
    CHECK(encode_row(bits_of("1111")).runs == std::vector<std::uint32_t>{0, 4});
    CHECK_THROWS_AS(encode_row({}), ValidationError);
}

TEST_CASE("decode_row reference rows") {
    CHECK(decode_row({{14}, 14}) == bits_of("00000000000000"));
    CHECK(decode_row({{2, 2, 4, 5, 1}, 14}) == bits_of("00110000111110"));
    CHECK(decode_row({{0, 4}, 4}) == bits_of("1111"));
}

TEST_CASE("decode_row rejects non-canonical rows") {
    CHECK_THROWS_WITH_AS(decode_row({{2, 0, 2}, 4}), doctest::Contains("index 1"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(decode_row({{2, 2, 0}, 4}), doctest::Contains("index 2"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(decode_row({{2, 3}, 4}), doctest::Contains("sum"),
                         ValidationError);
    CHECK_THROWS_AS(decode_row({{}, 4}), ValidationError);
}

TEST_CASE("encode_image matches the reference run columns") {
    const auto doc = testing::reference_document();
    CHECK(encode_image(decode_image(doc)) == doc);
}

TEST_CASE("blank image encodes to [width] rows") {
    BinaryImage blank(5, 5);
    const auto doc = encode_image(blank);
    for (const auto& row : doc.rows)
        CHECK(row.runs == std::vector<std::uint32_t>{5});
    CHECK(decode_image(doc) == blank);
}

TEST_CASE("round trip: exhaustive small widths") {
    for (std::int32_t w = 1; w <= 8; ++w) {
        for (std::uint32_t pattern = 0; pattern < (1u << w); ++pattern) {
            auto img = testing::image_from_pattern(pattern, w);
            const auto doc = encode_image(img);
            CHECK(decode_image(doc) == img);
            validate_document(doc);
            // k <= n+1; k <= n when the row starts with background
            CHECK(doc.rows[0].runs.size() <=
                  static_cast<std::size_t>(w) + (pattern & 1 ? 1 : 0));
        }
    }
}

TEST_CASE("round trip: random images") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 64);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        auto img = testing::random_image(rng, dim(rng), dim(rng), dens(rng));
        CHECK(decode_image(encode_image(img)) == img);
    }
}

TEST_CASE("compression_stats") {
    BinaryImage blank(5, 5);
    auto st = compression_stats(encode_image(blank));
    CHECK(st.max_k == 1);
    CHECK(st.ratio == doctest::Approx(5.0));

    CHECK(compression_stats(testing::reference_document()).max_k == 5);

    // alternating 0101... row of width 8: 8 stored runs, ratio 1.0
    auto alt = encode_image(from_ascii_art({"01010101"}));
    CHECK(alt.rows[0].runs ==
          std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 1, 1});
    auto ast = compression_stats(alt);
    CHECK(ast.max_k == 8);
    CHECK(ast.ratio == doctest::Approx(1.0));
}

TEST_CASE("rld format round trip") {
    const auto doc = testing::reference_document();
    const auto text = write_rld(doc);
    CHECK(text.rfind("RLD1 14 13\n", 0) == 0);
    CHECK(read_rld(text) == doc);

    CHECK_THROWS_AS(read_rld("XXX 2 2\n2\n2\n"), ParseError);
    CHECK_THROWS_AS(read_rld("RLD1 2 2\n2\n"), ParseError);       // missing row
    CHECK_THROWS_AS(read_rld("RLD1 2 2\n2\n1 0 1\n"), ValidationError);
}
