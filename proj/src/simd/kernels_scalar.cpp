#include "bgaug/simd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace bgaug::simd {
namespace {

inline float clamp_unit(float v) noexcept { return std::min(std::max(v, 0.0f), 1.0f); }

void accumulate(double* acc, const float* in, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += static_cast<double>(in[i]);
}

void divide(float* out, const double* acc, double divisor, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<float>(acc[i] / divisor);
}

void add_periodic_clamp(float* x, const float* pattern, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = clamp_unit(x[i] + pattern[i % kPatternPeriod]);
}

void add_clamp(float* x, const float* delta, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = clamp_unit(x[i] + delta[i]);
}

void blend(float* out, const float* m, const float* a, const float* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] * a[i] + (1.0f - m[i]) * b[i];
}

void lerp(float* out, const float* a, const float* b, float w, std::size_t n) {
    const float wa = 1.0f - w;
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * wa + b[i] * w;
}

void u8_to_unit(float* out, const std::uint8_t* in, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<float>(in[i]) / 255.0f;
}

void unit_to_u8(std::uint8_t* out, const float* in, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<std::uint8_t>(std::lrint(clamp_unit(in[i]) * 255.0f));
}

void threshold(std::uint8_t* out, const float* in, float theta, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = in[i] >= theta ? 1 : 0;
}

JaccardSums jaccard_sums(const std::uint8_t* y, const float* p, std::size_t n) {
    double inter[kReductionLanes] = {};
    double uni[kReductionLanes] = {};
    for (std::size_t i = 0; i < n; ++i) {
        const double yv = y[i];
        const double pv = p[i];
        const double prod = yv * pv;
        inter[i % kReductionLanes] += prod;
        uni[i % kReductionLanes] += (yv + pv) - prod;
    }
    return {reduce_lanes(inter), reduce_lanes(uni)};
}

ConfusionTally confusion(const std::uint8_t* pred, const std::uint8_t* label, const std::uint8_t* roi,
                         std::size_t n) {
    ConfusionTally t;
    for (std::size_t i = 0; i < n; ++i) {
        if (!roi[i] || label[i] > 2) continue;
        const bool gt_fg = label[i] == 1;
        const bool pr_fg = pred[i] != 0;
        t.tp += gt_fg && pr_fg;
        t.fn += gt_fg && !pr_fg;
        t.fp += !gt_fg && pr_fg;
        t.tn += !gt_fg && !pr_fg;
    }
    return t;
}

constexpr KernelTable kTable{
    Isa::Scalar, accumulate, divide,     add_periodic_clamp, add_clamp,    blend,
    lerp,        u8_to_unit, unit_to_u8, threshold,          jaccard_sums, confusion,
};

} // namespace

const KernelTable& scalar_kernels() noexcept { return kTable; }

} // namespace bgaug::simd
