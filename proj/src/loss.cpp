#include "bgaug/loss.hpp"

#include "bgaug/error.hpp"
#include "bgaug/simd/kernels.hpp"

namespace bgaug {
namespace {

simd::JaccardSums checked_sums(const ForegroundMask& y, const ProbabilityMap& p, double smoothing) {
    if (y.height() != p.height || y.width() != p.width || p.data.size() != y.size())
        throw Error(ErrorCode::DimensionMismatch, "label and probability map differ in shape");
    if (!(smoothing > 0.0)) throw Error(ErrorCode::NonPositiveSmoothing, "smoothing T must be > 0");
    for (float v : p.data)
        if (!(v >= 0.0f && v <= 1.0f)) throw Error(ErrorCode::InvalidArgument, "probabilities must lie in [0,1]");
    return simd::active().jaccard_sums(y.data().data(), p.data.data(), y.size());
}

} // namespace

double relaxed_jaccard_value(const ForegroundMask& y, const ProbabilityMap& yhat, double smoothing) {
    const auto s = checked_sums(y, yhat, smoothing);
    return (smoothing + s.intersection) / (smoothing + s.union_);
}

JaccardResult relaxed_jaccard(const ForegroundMask& y, const ProbabilityMap& yhat, double smoothing) {
    const auto s = checked_sums(y, yhat, smoothing);
    const double num = smoothing + s.intersection;
    const double den = smoothing + s.union_;
    JaccardResult r;
    r.value = num / den;
    r.gradient.resize(y.size());
    const double den2 = den * den;
    const auto yd = y.data();
    for (std::size_t i = 0; i < yd.size(); ++i) {
        const double yi = yd[i];
        r.gradient[i] = (yi * den - num * (1.0 - yi)) / den2;
    }
    return r;
}

ForegroundMask threshold(const ProbabilityMap& yhat, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw Error(ErrorCode::InvalidArgument, "threshold must lie in [0,1]");
    if (yhat.data.size() != yhat.height * yhat.width)
        throw Error(ErrorCode::DimensionMismatch, "probability map data does not match its dimensions");
    ForegroundMask out(yhat.height, yhat.width);
    simd::active().threshold(out.data().data(), yhat.data.data(), static_cast<float>(theta), yhat.data.size());
    return out;
}

} // namespace bgaug
