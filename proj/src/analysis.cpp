#include "rlent/analysis.hpp"

#include <cmath>
#include <set>

#include "rlent/errors.hpp"

namespace rlent {

std::vector<FeatureRow> feature_table(std::span<const Sample> samples,
                                      Quantifier q, Direction d, LogBase base) {
    if (samples.empty())
        throw ValidationError("feature table needs at least one sample");
    std::set<std::string> seen;
    std::vector<FeatureRow> table;
    table.reserve(samples.size());
    for (const auto& s : samples) {
        if (!seen.insert(s.label).second)
            throw ValidationError("duplicate sample label '" + s.label + "'");
        const auto f = compute_entropy(s.doc, q, d, base);
        table.push_back({s.label, f.f1, f.f2, f.f3});
    }
    return table;
}

DistanceMatrix distance_matrix(std::span<const Sample> samples, Quantifier q,
                               Direction d, LogBase base) {
    if (samples.size() < 2)
        throw ValidationError("distance matrix needs at least two samples");
    const auto table = feature_table(samples, q, d, base);

    DistanceMatrix m;
    m.quantifier = q;
    m.direction = d;
    m.log_base = base;
    const std::size_t n = table.size();
    m.values.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m.labels.push_back(table[i].label);
        for (std::size_t j = 0; j < i; ++j) {
            const double dist = std::abs(table[i].f3 - table[j].f3);
            m.values[i][j] = dist;
            m.values[j][i] = dist;
        }
    }
    return m;
}

bool equivalence_check(const RLEDocument& a, const RLEDocument& b, Quantifier q,
                       Direction d, double tolerance, LogBase base) {
    if (tolerance < 0.0)
        throw ValidationError("tolerance must be >= 0");
    const double fa = compute_entropy(a, q, d, base).f3;
    const double fb = compute_entropy(b, q, d, base).f3;
    return std::abs(fa - fb) <= tolerance;
}

} // namespace rlent
