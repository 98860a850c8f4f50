#include "rlent/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "rlent/errors.hpp"
#include "rlent/transitions.hpp"

namespace rlent {

double stable_sum(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    for (double v : sorted) total += v;
    return total;
}

double apply_log(double x, LogBase base) {
    switch (base) {
        case LogBase::Two: return std::log2(x);
        case LogBase::Ten: return std::log10(x);
        default: return std::log(x);
    }
}

double ceq_row(std::uint32_t count, std::uint32_t n, LogBase base) {
    if (count > n)
        throw ValidationError("transition count " + std::to_string(count) +
                              " exceeds row length " + std::to_string(n));
    // p = 0 and p = 1 both contribute nothing under the 0*log(1/0) := 0
    // convention. p = 1 is reachable: a lone ink pixel in a length-1 line.
    if (count == 0 || count == n) return 0.0;
    const double p = static_cast<double>(count) / n;
    return p * apply_log(1.0 / p, base) + (1.0 - p) * apply_log(1.0 / (1.0 - p), base);
}

double seq_kernel(std::uint32_t pos, std::uint32_t alpha, std::uint32_t m,
                  std::uint32_t n, LogBase base) {
    if (pos < 1 || pos > n)
        throw ValidationError("transition position " + std::to_string(pos) +
                              " out of range [1, " + std::to_string(n) + "]");
    if (alpha < 1 || alpha > m)
        throw ValidationError("line index " + std::to_string(alpha) +
                              " out of range [1, " + std::to_string(m) + "]");
    const double pn = static_cast<double>(pos) / n;
    return (static_cast<double>(alpha) / m) *
           (pn * apply_log(static_cast<double>(n) / pos, base) +
            (m - pn) * apply_log(static_cast<double>(m) / (m + n - pos), base));
}

std::pair<double, double> seq_row(std::span<const std::uint32_t> pos01,
                                  std::span<const std::uint32_t> pos10,
                                  std::uint32_t alpha, std::uint32_t m,
                                  std::uint32_t n, LogBase base) {
    double eplus = 0.0, eminus = 0.0;
    for (auto pos : pos01) eplus += seq_kernel(pos, alpha, m, n, base);
    for (auto pos : pos10) eminus += seq_kernel(pos, alpha, m, n, base);
    return {eplus, eminus};
}

namespace {

EntropyFeatures assemble(Quantifier q, Direction d, LogBase base,
                         std::vector<std::pair<double, double>> per_line) {
    EntropyFeatures f;
    f.quantifier = q;
    f.direction = d;
    f.log_base = base;
    std::vector<double> eplus, eminus;
    eplus.reserve(per_line.size());
    eminus.reserve(per_line.size());
    for (const auto& [ep, em] : per_line) {
        eplus.push_back(ep);
        eminus.push_back(em);
    }
    f.f1 = stable_sum(eplus);
    f.f2 = stable_sum(eminus);
    f.f3 = f.f1 + f.f2;
    f.per_line = std::move(per_line);
    return f;
}

} // namespace

EntropyFeatures ceq_horizontal(const RLEDocument& doc, LogBase base) {
    validate_document(doc);
    std::vector<std::pair<double, double>> per_line;
    per_line.reserve(doc.height);
    for (const auto& row : doc.rows) {
        const auto [c01, c10] = count_transitions(row);
        per_line.emplace_back(ceq_row(c01, doc.width, base),
                              ceq_row(c10, doc.width, base));
    }
    return assemble(Quantifier::CEQ, Direction::Horizontal, base, std::move(per_line));
}

EntropyFeatures seq_horizontal(const RLEDocument& doc, LogBase base) {
    validate_document(doc);
    std::vector<std::pair<double, double>> per_line;
    per_line.reserve(doc.height);
    for (std::uint32_t r = 0; r < doc.height; ++r) {
        const auto t = transition_positions(doc.rows[r]);
        per_line.push_back(seq_row(t.pos01, t.pos10, r + 1, doc.height, doc.width, base));
    }
    return assemble(Quantifier::SEQ, Direction::Horizontal, base, std::move(per_line));
}

EntropyFeatures ceq_vertical(const RLEDocument& doc, LogBase base) {
    // A column has m pixels, so p = count / m.
    const auto columns = column_transition_sets(doc);
    std::vector<std::pair<double, double>> per_line;
    per_line.reserve(columns.size());
    for (const auto& t : columns)
        per_line.emplace_back(ceq_row(t.count01, doc.height, base),
                              ceq_row(t.count10, doc.height, base));
    return assemble(Quantifier::CEQ, Direction::Vertical, base, std::move(per_line));
}

EntropyFeatures seq_vertical(const RLEDocument& doc, LogBase base) {
    // Roles of m and n exchanged: the column index plays alpha over n
    // columns, positions run over the m pixels of the column.
    const auto columns = column_transition_sets(doc);
    std::vector<std::pair<double, double>> per_line;
    per_line.reserve(columns.size());
    for (std::uint32_t c = 0; c < columns.size(); ++c)
        per_line.push_back(seq_row(columns[c].pos01, columns[c].pos10, c + 1,
                                   doc.width, doc.height, base));
    return assemble(Quantifier::SEQ, Direction::Vertical, base, std::move(per_line));
}

EntropyFeatures compute_entropy(const RLEDocument& doc, Quantifier q, Direction d,
                                LogBase base) {
    if (d == Direction::Horizontal)
        return q == Quantifier::CEQ ? ceq_horizontal(doc, base)
                                    : seq_horizontal(doc, base);
    return q == Quantifier::CEQ ? ceq_vertical(doc, base) : seq_vertical(doc, base);
}

std::string to_string(Quantifier q) { return q == Quantifier::CEQ ? "ceq" : "seq"; }
std::string to_string(Direction d) {
    return d == Direction::Horizontal ? "horizontal" : "vertical";
}
std::string to_string(LogBase b) {
    switch (b) {
        case LogBase::Two: return "2";
        case LogBase::Ten: return "10";
        default: return "e";
    }
}

} // namespace rlent
