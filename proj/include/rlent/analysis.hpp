#pragma once

#include <span>
#include <string>
#include <vector>

#include "rlent/entropy.hpp"
#include "rlent/rle.hpp"

namespace rlent {

struct Sample {
    std::string label;
    RLEDocument doc;
};

struct FeatureRow {
    std::string label;
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
};

// One feature row per sample, in input order.
std::vector<FeatureRow> feature_table(std::span<const Sample> samples,
                                      Quantifier q, Direction d,
                                      LogBase base = LogBase::E);

// Pairwise |F3_i - F3_j| on unrounded totals. Symmetric, zero diagonal.
struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;
    Quantifier quantifier = Quantifier::CEQ;
    Direction direction = Direction::Horizontal;
    LogBase log_base = LogBase::E;
};

DistanceMatrix distance_matrix(std::span<const Sample> samples, Quantifier q,
                               Direction d, LogBase base = LogBase::E);

// True iff |F3_a - F3_b| <= tolerance.
bool equivalence_check(const RLEDocument& a, const RLEDocument& b, Quantifier q,
                       Direction d, double tolerance, LogBase base = LogBase::E);

} // namespace rlent
