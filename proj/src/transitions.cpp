#include "rlent/transitions.hpp"

#include "rlent/errors.hpp"

namespace rlent {

std::pair<std::uint32_t, std::uint32_t> count_transitions(const RLERow& row) {
    std::uint32_t c01 = 0, c10 = 0;
    for (std::size_t i = 0; i < row.runs.size(); ++i) {
        if (row.runs[i] == 0) continue;
        if (i % 2 == 1)
            ++c01;              // even column: run of ink, a 0->1 entry point
        else if (i > 0)
            ++c10;              // odd column past the first: back to background
    }
    return {c01, c10};
}

LineTransitions transition_positions(const RLERow& row) {
    LineTransitions t;
    std::uint64_t prefix = row.runs.empty() ? 0 : row.runs[0];
    for (std::size_t i = 1; i < row.runs.size(); ++i) {
        if (row.runs[i] != 0) {
            const auto pos = static_cast<std::uint32_t>(prefix + 1);
            if (i % 2 == 1)
                t.pos01.push_back(pos);
            else
                t.pos10.push_back(pos);
        }
        prefix += row.runs[i];
    }
    t.count01 = static_cast<std::uint32_t>(t.pos01.size());
    t.count10 = static_cast<std::uint32_t>(t.pos10.size());
    return t;
}

VirtualDecompressor::VirtualDecompressor(const RLEDocument& doc)
    : width_(doc.width), height_(doc.height) {
    validate_document(doc);
    rows_.reserve(doc.rows.size());
    for (const auto& row : doc.rows)
        rows_.push_back({row.runs, 0});
}

namespace {

// Pops one pixel from a row. Returns the emitted bit and whether a
// shift-pop occurred.
std::pair<std::uint8_t, bool> pop_row(std::vector<std::uint32_t>& runs,
                                      std::size_t& cursor) {
    bool shifted = false;
    if (cursor + 1 < runs.size() && runs[cursor] == 0 && runs[cursor + 1] == 0) {
        cursor += 2; // shift-pop: skip the exhausted run pair
        shifted = true;
    }
    std::size_t col = cursor;
    if (runs[col] == 0 && col + 1 < runs.size())
        col = cursor + 1;
    --runs[col];
    return {static_cast<std::uint8_t>(col % 2), shifted};
}

} // namespace

bool VirtualDecompressor::next_pass(std::vector<std::uint8_t>& column_out) {
    if (done()) return false;
    column_out.resize(height_);
    for (std::uint32_t r = 0; r < height_; ++r) {
        auto& rs = rows_[r];
        column_out[r] = pop_row(rs.runs, rs.cursor).first;
    }
    ++pass_;
    return true;
}

std::vector<TraceRecord> virtual_decompress_trace(const RLEDocument& doc,
                                                  std::uint32_t max_passes) {
    VirtualDecompressor vd(doc);
    std::vector<TraceRecord> trace;
    const std::uint32_t passes = std::min(max_passes, doc.width);
    for (std::uint32_t p = 1; p <= passes; ++p) {
        for (std::uint32_t r = 0; r < doc.height; ++r) {
            auto& rs = vd.rows_[r];
            auto [bit, shifted] = pop_row(rs.runs, rs.cursor);
            TraceRecord rec;
            rec.pass = p;
            rec.line = r + 1;
            rec.bit = bit;
            rec.remaining.assign(rs.runs.begin() +
                                     static_cast<std::ptrdiff_t>(rs.cursor),
                                 rs.runs.end());
            rec.shift_pop = shifted;
            trace.push_back(std::move(rec));
        }
        ++vd.pass_;
    }
    return trace;
}

std::vector<std::uint8_t> virtual_decompress(const RLEDocument& doc) {
    VirtualDecompressor vd(doc);
    std::vector<std::uint8_t> stream;
    stream.reserve(static_cast<std::size_t>(doc.width) * doc.height);
    std::vector<std::uint8_t> column;
    while (vd.next_pass(column))
        stream.insert(stream.end(), column.begin(), column.end());
    return stream;
}

std::vector<LineTransitions> column_transition_sets(const RLEDocument& doc) {
    VirtualDecompressor vd(doc);
    std::vector<LineTransitions> columns;
    columns.reserve(doc.width);
    std::vector<std::uint8_t> column;
    while (vd.next_pass(column)) {
        LineTransitions t;
        std::uint8_t prev = 0; // implicit leading background
        for (std::uint32_t r = 0; r < doc.height; ++r) {
            if (column[r] != prev) {
                if (column[r] == 1)
                    t.pos01.push_back(r + 1);
                else
                    t.pos10.push_back(r + 1);
                prev = column[r];
            }
        }
        t.count01 = static_cast<std::uint32_t>(t.pos01.size());
        t.count10 = static_cast<std::uint32_t>(t.pos10.size());
        columns.push_back(std::move(t));
    }
    return columns;
}

} // namespace rlent
