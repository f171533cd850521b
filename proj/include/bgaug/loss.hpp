#pragma once

#include "bgaug/image.hpp"

#include <span>
#include <vector>

namespace bgaug {

/// Per-pixel foreground probability in [0,1].
struct ProbabilityMap {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<float> data;
};

struct JaccardResult {
    double value = 0.0;            // J_R in (0, 1]
    std::vector<double> gradient;  // dJ_R / d yhat, per pixel
};

/// Relaxed Jaccard index
///   J_R = (T + sum(y * p)) / (T + sum(y + p - y * p))
/// with its closed-form gradient
///   dJ_R/dp_i = (y_i * D - N * (1 - y_i)) / D^2,   N, D the numerator and denominator.
/// Train by minimizing 1 - J_R.
JaccardResult relaxed_jaccard(const ForegroundMask& y, const ProbabilityMap& yhat, double smoothing);

/// Value only; same sums as relaxed_jaccard.
double relaxed_jaccard_value(const ForegroundMask& y, const ProbabilityMap& yhat, double smoothing);

/// mask = yhat >= theta (a tie at theta is foreground).
ForegroundMask threshold(const ProbabilityMap& yhat, double theta);

} // namespace bgaug
