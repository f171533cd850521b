// AArch64 only. Mirrors the scalar kernels lane for lane; the confusion tally
// stays scalar because the byte-mask popcounts do not map cleanly onto NEON.

#include "bgaug/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace bgaug::simd {
namespace {

inline float clamp_unit(float v) noexcept { return std::min(std::max(v, 0.0f), 1.0f); }

inline float32x4_t clamp_unit(float32x4_t v) noexcept {
    return vminq_f32(vmaxq_f32(v, vdupq_n_f32(0.0f)), vdupq_n_f32(1.0f));
}

void accumulate(double* acc, const float* in, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vcvt_f64_f32(vld1_f32(in + i))));
    for (; i < n; ++i) acc[i] += static_cast<double>(in[i]);
}

void divide(float* out, const double* acc, double divisor, std::size_t n) {
    const float64x2_t d = vdupq_n_f64(divisor);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1_f32(out + i, vcvt_f32_f64(vdivq_f64(vld1q_f64(acc + i), d)));
    for (; i < n; ++i) out[i] = static_cast<float>(acc[i] / divisor);
}

void add_periodic_clamp(float* x, const float* pattern, std::size_t n) {
    static_assert(kPatternPeriod % 4 == 0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(x + i, clamp_unit(vaddq_f32(vld1q_f32(x + i), vld1q_f32(pattern + (i % kPatternPeriod)))));
    for (; i < n; ++i) x[i] = clamp_unit(x[i] + pattern[i % kPatternPeriod]);
}

void add_clamp(float* x, const float* delta, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) vst1q_f32(x + i, clamp_unit(vaddq_f32(vld1q_f32(x + i), vld1q_f32(delta + i))));
    for (; i < n; ++i) x[i] = clamp_unit(x[i] + delta[i]);
}

void blend(float* out, const float* m, const float* a, const float* b, std::size_t n) {
    const float32x4_t one = vdupq_n_f32(1.0f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t mv = vld1q_f32(m + i);
        const float32x4_t lhs = vmulq_f32(mv, vld1q_f32(a + i));
        const float32x4_t rhs = vmulq_f32(vsubq_f32(one, mv), vld1q_f32(b + i));
        vst1q_f32(out + i, vaddq_f32(lhs, rhs));
    }
    for (; i < n; ++i) out[i] = m[i] * a[i] + (1.0f - m[i]) * b[i];
}

void lerp(float* out, const float* a, const float* b, float w, std::size_t n) {
    const float wa = 1.0f - w;
    const float32x4_t vwa = vdupq_n_f32(wa);
    const float32x4_t vw = vdupq_n_f32(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(out + i, vaddq_f32(vmulq_f32(vld1q_f32(a + i), vwa), vmulq_f32(vld1q_f32(b + i), vw)));
    for (; i < n; ++i) out[i] = a[i] * wa + b[i] * w;
}

void u8_to_unit(float* out, const std::uint8_t* in, std::size_t n) {
    const float32x4_t d = vdupq_n_f32(255.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const uint16x8_t w16 = vmovl_u8(vld1_u8(in + i));
        vst1q_f32(out + i, vdivq_f32(vcvtq_f32_u32(vmovl_u16(vget_low_u16(w16))), d));
        vst1q_f32(out + i + 4, vdivq_f32(vcvtq_f32_u32(vmovl_u16(vget_high_u16(w16))), d));
    }
    for (; i < n; ++i) out[i] = static_cast<float>(in[i]) / 255.0f;
}

void unit_to_u8(std::uint8_t* out, const float* in, std::size_t n) {
    const float32x4_t s = vdupq_n_f32(255.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const uint32x4_t lo = vcvtnq_u32_f32(vmulq_f32(clamp_unit(vld1q_f32(in + i)), s));
        const uint32x4_t hi = vcvtnq_u32_f32(vmulq_f32(clamp_unit(vld1q_f32(in + i + 4)), s));
        vst1_u8(out + i, vmovn_u16(vcombine_u16(vmovn_u32(lo), vmovn_u32(hi))));
    }
    for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(std::lrint(clamp_unit(in[i]) * 255.0f));
}

void threshold(std::uint8_t* out, const float* in, float theta, std::size_t n) {
    const float32x4_t t = vdupq_n_f32(theta);
    const uint32x4_t one = vdupq_n_u32(1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const uint32x4_t lo = vandq_u32(vcgeq_f32(vld1q_f32(in + i), t), one);
        const uint32x4_t hi = vandq_u32(vcgeq_f32(vld1q_f32(in + i + 4), t), one);
        vst1_u8(out + i, vmovn_u16(vcombine_u16(vmovn_u32(lo), vmovn_u32(hi))));
    }
    for (; i < n; ++i) out[i] = in[i] >= theta ? 1 : 0;
}

JaccardSums jaccard_sums(const std::uint8_t* y, const float* p, std::size_t n) {
    float64x2_t inter[4] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0), vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    float64x2_t uni[4] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0), vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const uint16x8_t y16 = vmovl_u8(vld1_u8(y + i));
        const uint32x4_t y32[2] = {vmovl_u16(vget_low_u16(y16)), vmovl_u16(vget_high_u16(y16))};
        const float32x4_t pf[2] = {vld1q_f32(p + i), vld1q_f32(p + i + 4)};
        for (int half = 0; half < 2; ++half) {
            const float64x2_t yv[2] = {vcvtq_f64_u64(vmovl_u32(vget_low_u32(y32[half]))),
                                       vcvtq_f64_u64(vmovl_u32(vget_high_u32(y32[half])))};
            const float64x2_t pv[2] = {vcvt_f64_f32(vget_low_f32(pf[half])), vcvt_high_f64_f32(pf[half])};
            for (int q = 0; q < 2; ++q) {
                const int lane = half * 2 + q;
                const float64x2_t prod = vmulq_f64(yv[q], pv[q]);
                inter[lane] = vaddq_f64(inter[lane], prod);
                uni[lane] = vaddq_f64(uni[lane], vsubq_f64(vaddq_f64(yv[q], pv[q]), prod));
            }
        }
    }
    double inter_l[kReductionLanes];
    double uni_l[kReductionLanes];
    for (int lane = 0; lane < 4; ++lane) {
        vst1q_f64(inter_l + 2 * lane, inter[lane]);
        vst1q_f64(uni_l + 2 * lane, uni[lane]);
    }
    for (; i < n; ++i) {
        const double yv = y[i];
        const double pv = p[i];
        const double prod = yv * pv;
        inter_l[i % kReductionLanes] += prod;
        uni_l[i % kReductionLanes] += (yv + pv) - prod;
    }
    return {reduce_lanes(inter_l), reduce_lanes(uni_l)};
}

} // namespace

const KernelTable& neon_kernels() noexcept {
    static const KernelTable table{
        Isa::Neon,  accumulate, divide,    add_periodic_clamp, add_clamp,
        blend,      lerp,       u8_to_unit, unit_to_u8,        threshold,
        jaccard_sums, scalar_kernels().confusion,
    };
    return table;
}

} // namespace bgaug::simd

#endif
