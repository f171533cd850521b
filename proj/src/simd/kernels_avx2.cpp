// Compiled with -mavx2; only entered after a runtime CPU check.

#include "bgaug/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cmath>

namespace bgaug::simd {
namespace {

inline float clamp_unit(float v) noexcept { return std::min(std::max(v, 0.0f), 1.0f); }

inline __m256 clamp_unit(__m256 v) noexcept {
    return _mm256_min_ps(_mm256_max_ps(v, _mm256_setzero_ps()), _mm256_set1_ps(1.0f));
}

// Packs the low byte of eight 32-bit lanes into out[0..8).
inline void store_u8x8(std::uint8_t* out, __m256i v32) noexcept {
    const __m128i lo = _mm256_castsi256_si128(v32);
    const __m128i hi = _mm256_extracti128_si256(v32, 1);
    const __m128i p16 = _mm_packus_epi32(lo, hi);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(out), _mm_packus_epi16(p16, p16));
}

inline __m256i load_u8x8_epi32(const std::uint8_t* in) noexcept {
    return _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(in)));
}

void accumulate(double* acc, const float* in, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_cvtps_pd(_mm_loadu_ps(in + i))));
    for (; i < n; ++i) acc[i] += static_cast<double>(in[i]);
}

void divide(float* out, const double* acc, double divisor, std::size_t n) {
    const __m256d d = _mm256_set1_pd(divisor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm_storeu_ps(out + i, _mm256_cvtpd_ps(_mm256_div_pd(_mm256_loadu_pd(acc + i), d)));
    for (; i < n; ++i) out[i] = static_cast<float>(acc[i] / divisor);
}

void add_periodic_clamp(float* x, const float* pattern, std::size_t n) {
    static_assert(kPatternPeriod % 8 == 0);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 p = _mm256_loadu_ps(pattern + (i % kPatternPeriod));
        _mm256_storeu_ps(x + i, clamp_unit(_mm256_add_ps(_mm256_loadu_ps(x + i), p)));
    }
    for (; i < n; ++i) x[i] = clamp_unit(x[i] + pattern[i % kPatternPeriod]);
}

void add_clamp(float* x, const float* delta, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(x + i, clamp_unit(_mm256_add_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(delta + i))));
    for (; i < n; ++i) x[i] = clamp_unit(x[i] + delta[i]);
}

void blend(float* out, const float* m, const float* a, const float* b, std::size_t n) {
    const __m256 one = _mm256_set1_ps(1.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 mv = _mm256_loadu_ps(m + i);
        const __m256 lhs = _mm256_mul_ps(mv, _mm256_loadu_ps(a + i));
        const __m256 rhs = _mm256_mul_ps(_mm256_sub_ps(one, mv), _mm256_loadu_ps(b + i));
        _mm256_storeu_ps(out + i, _mm256_add_ps(lhs, rhs));
    }
    for (; i < n; ++i) out[i] = m[i] * a[i] + (1.0f - m[i]) * b[i];
}

void lerp(float* out, const float* a, const float* b, float w, std::size_t n) {
    const float wa = 1.0f - w;
    const __m256 vwa = _mm256_set1_ps(wa);
    const __m256 vw = _mm256_set1_ps(w);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 lhs = _mm256_mul_ps(_mm256_loadu_ps(a + i), vwa);
        const __m256 rhs = _mm256_mul_ps(_mm256_loadu_ps(b + i), vw);
        _mm256_storeu_ps(out + i, _mm256_add_ps(lhs, rhs));
    }
    for (; i < n; ++i) out[i] = a[i] * wa + b[i] * w;
}

void u8_to_unit(float* out, const std::uint8_t* in, std::size_t n) {
    const __m256 d = _mm256_set1_ps(255.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(out + i, _mm256_div_ps(_mm256_cvtepi32_ps(load_u8x8_epi32(in + i)), d));
    for (; i < n; ++i) out[i] = static_cast<float>(in[i]) / 255.0f;
}

void unit_to_u8(std::uint8_t* out, const float* in, std::size_t n) {
    const __m256 s = _mm256_set1_ps(255.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 v = _mm256_mul_ps(clamp_unit(_mm256_loadu_ps(in + i)), s);
        store_u8x8(out + i, _mm256_cvtps_epi32(v));
    }
    for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(std::lrint(clamp_unit(in[i]) * 255.0f));
}

void threshold(std::uint8_t* out, const float* in, float theta, std::size_t n) {
    const __m256 t = _mm256_set1_ps(theta);
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 ge = _mm256_cmp_ps(_mm256_loadu_ps(in + i), t, _CMP_GE_OQ);
        store_u8x8(out + i, _mm256_and_si256(_mm256_castps_si256(ge), one));
    }
    for (; i < n; ++i) out[i] = in[i] >= theta ? 1 : 0;
}

JaccardSums jaccard_sums(const std::uint8_t* y, const float* p, std::size_t n) {
    __m256d inter_lo = _mm256_setzero_pd(), inter_hi = _mm256_setzero_pd();
    __m256d uni_lo = _mm256_setzero_pd(), uni_hi = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i y32 = load_u8x8_epi32(y + i);
        const __m256d y_lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(y32));
        const __m256d y_hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(y32, 1));
        const __m256 pf = _mm256_loadu_ps(p + i);
        const __m256d p_lo = _mm256_cvtps_pd(_mm256_castps256_ps128(pf));
        const __m256d p_hi = _mm256_cvtps_pd(_mm256_extractf128_ps(pf, 1));
        const __m256d prod_lo = _mm256_mul_pd(y_lo, p_lo);
        const __m256d prod_hi = _mm256_mul_pd(y_hi, p_hi);
        inter_lo = _mm256_add_pd(inter_lo, prod_lo);
        inter_hi = _mm256_add_pd(inter_hi, prod_hi);
        uni_lo = _mm256_add_pd(uni_lo, _mm256_sub_pd(_mm256_add_pd(y_lo, p_lo), prod_lo));
        uni_hi = _mm256_add_pd(uni_hi, _mm256_sub_pd(_mm256_add_pd(y_hi, p_hi), prod_hi));
    }
    alignas(32) double inter[kReductionLanes];
    alignas(32) double uni[kReductionLanes];
    _mm256_store_pd(inter, inter_lo);
    _mm256_store_pd(inter + 4, inter_hi);
    _mm256_store_pd(uni, uni_lo);
    _mm256_store_pd(uni + 4, uni_hi);
    for (; i < n; ++i) {
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
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi8(1);
    const __m256i two = _mm256_set1_epi8(2);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i lv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(label + i));
        const __m256i rv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(roi + i));
        const __m256i pv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred + i));
        const auto in_roi = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(rv, zero)));
        const auto scored = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(_mm256_min_epu8(lv, two), lv)));
        const auto gt_fg = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lv, one)));
        const auto pr_fg = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(pv, zero)));
        const std::uint32_t valid = in_roi & scored;
        t.tp += std::popcount(valid & gt_fg & pr_fg);
        t.fn += std::popcount(valid & gt_fg & ~pr_fg);
        t.fp += std::popcount(valid & ~gt_fg & pr_fg);
        t.tn += std::popcount(valid & ~gt_fg & ~pr_fg);
    }
    for (; i < n; ++i) {
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
    Isa::Avx2, accumulate, divide,     add_periodic_clamp, add_clamp,    blend,
    lerp,      u8_to_unit, unit_to_u8, threshold,          jaccard_sums, confusion,
};

} // namespace

const KernelTable& avx2_kernels() noexcept { return kTable; }

} // namespace bgaug::simd
