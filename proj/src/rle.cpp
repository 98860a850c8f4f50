#include "rlent/rle.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

#include "rlent/errors.hpp"

namespace rlent {

void validate_row(const RLERow& row) {
    if (row.width < 1)
        throw ValidationError("rle row width must be >= 1");
    if (row.runs.empty())
        throw ValidationError("rle row has no runs");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < row.runs.size(); ++i) {
        if (i > 0 && row.runs[i] == 0)
            throw ValidationError("zero run at index " + std::to_string(i) +
                                  " (only the first run may be zero)");
        sum += row.runs[i];
    }
    if (sum != row.width)
        throw ValidationError("runs sum to " + std::to_string(sum) +
                              ", expected width " + std::to_string(row.width));
}

void validate_document(const RLEDocument& doc) {
    if (doc.height < 1 || doc.rows.size() != doc.height)
        throw ValidationError("document height does not match row count");
    for (const auto& row : doc.rows) {
        if (row.width != doc.width)
            throw ValidationError("row width does not match document width");
        validate_row(row);
    }
}

RLERow encode_row(std::span<const std::uint8_t> bits) {
    if (bits.empty())
        throw ValidationError("cannot encode an empty row");
    RLERow row;
    row.width = static_cast<std::uint32_t>(bits.size());
    std::uint8_t current = 0; // runs start counting background
    std::uint32_t len = 0;
    for (std::uint8_t b : bits) {
        if (b == current) {
            ++len;
        } else {
            row.runs.push_back(len);
            current = b;
            len = 1;
        }
    }
    row.runs.push_back(len);
    return row;
}

std::vector<std::uint8_t> decode_row(const RLERow& row) {
    validate_row(row);
    std::vector<std::uint8_t> bits;
    bits.reserve(row.width);
    for (std::size_t i = 0; i < row.runs.size(); ++i)
        bits.insert(bits.end(), row.runs[i], static_cast<std::uint8_t>(i % 2));
    return bits;
}

RLEDocument encode_image(const BinaryImage& img) {
    RLEDocument doc;
    doc.width = static_cast<std::uint32_t>(img.width());
    doc.height = static_cast<std::uint32_t>(img.height());
    doc.rows.reserve(doc.height);
    for (std::int32_t r = 0; r < img.height(); ++r)
        doc.rows.push_back(encode_row({img.row(r), static_cast<std::size_t>(img.width())}));
    return doc;
}

BinaryImage decode_image(const RLEDocument& doc) {
    validate_document(doc);
    BinaryImage img(static_cast<std::int32_t>(doc.width),
                    static_cast<std::int32_t>(doc.height));
    for (std::uint32_t r = 0; r < doc.height; ++r) {
        const auto bits = decode_row(doc.rows[r]);
        for (std::uint32_t c = 0; c < doc.width; ++c)
            img.set(static_cast<std::int32_t>(r), static_cast<std::int32_t>(c), bits[c]);
    }
    return img;
}

CompressionStats compression_stats(const RLEDocument& doc) {
    validate_document(doc);
    CompressionStats st;
    std::size_t total = 0;
    for (const auto& row : doc.rows) {
        st.max_k = std::max(st.max_k, row.runs.size());
        total += row.runs.size();
    }
    st.mean_k = static_cast<double>(total) / doc.height;
    st.ratio = static_cast<double>(doc.width) * doc.height / static_cast<double>(total);
    return st;
}

std::string write_rld(const RLEDocument& doc) {
    validate_document(doc);
    std::string out = "RLD1 " + std::to_string(doc.width) + " " +
                      std::to_string(doc.height) + "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.runs.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row.runs[i]);
        }
        out += '\n';
    }
    return out;
}

RLEDocument read_rld(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string magic;
    std::int64_t w = 0, h = 0;
    if (!(in >> magic >> w >> h) || magic != "RLD1")
        throw ParseError("rld: bad header, expected 'RLD1 <width> <height>'");
    if (w < 1 || h < 1 || w > INT32_MAX || h > INT32_MAX)
        throw ParseError("rld: dimensions out of range");

    RLEDocument doc;
    doc.width = static_cast<std::uint32_t>(w);
    doc.height = static_cast<std::uint32_t>(h);
    std::string line;
    std::getline(in, line); // rest of header line
    while (doc.rows.size() < doc.height && std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        RLERow row;
        row.width = doc.width;
        std::int64_t v;
        while (ls >> v) {
            if (v < 0 || v > UINT32_MAX)
                throw ParseError("rld: run value out of range in row " +
                                 std::to_string(doc.rows.size()));
            row.runs.push_back(static_cast<std::uint32_t>(v));
        }
        doc.rows.push_back(std::move(row));
    }
    if (doc.rows.size() != doc.height)
        throw ParseError("rld: expected " + std::to_string(doc.height) +
                         " rows, got " + std::to_string(doc.rows.size()));
    validate_document(doc);
    return doc;
}

} // namespace rlent
