#pragma once

// Data-parallel inner loops shared by the augmentation, background and metric
// code. Each ISA provides the same table; the scalar table is the reference.
//
// Elementwise kernels are bit-identical across ISAs (no FMA, IEEE div, default
// rounding). The two reductions use a fixed 8-lane striped order so that they
// are bit-identical as well.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bgaug::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct JaccardSums {
    double intersection = 0.0; // sum y * p
    double union_ = 0.0;       // sum (y + p - y * p)
};

struct ConfusionTally {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;
};

/// Period of the pattern consumed by add_periodic_clamp; divisible by 3 and 4.
inline constexpr std::size_t kPatternPeriod = 24;

/// Striping width of the reductions.
inline constexpr std::size_t kReductionLanes = 8;

struct KernelTable {
    Isa isa;
    // acc[i] += in[i], widened to double (exact for any realistic term count)
    void (*accumulate)(double* acc, const float* in, std::size_t n);
    // out[i] = float(acc[i] / divisor)
    void (*divide)(float* out, const double* acc, double divisor, std::size_t n);
    // x[i] = clamp(x[i] + pattern[i % kPatternPeriod], 0, 1)
    void (*add_periodic_clamp)(float* x, const float* pattern, std::size_t n);
    // x[i] = clamp(x[i] + delta[i], 0, 1)
    void (*add_clamp)(float* x, const float* delta, std::size_t n);
    // out[i] = m[i] * a[i] + (1 - m[i]) * b[i]
    void (*blend)(float* out, const float* m, const float* a, const float* b, std::size_t n);
    // out[i] = a[i] * (1 - w) + b[i] * w
    void (*lerp)(float* out, const float* a, const float* b, float w, std::size_t n);
    // out[i] = in[i] / 255
    void (*u8_to_unit)(float* out, const std::uint8_t* in, std::size_t n);
    // out[i] = round_half_even(clamp(in[i], 0, 1) * 255)
    void (*unit_to_u8)(std::uint8_t* out, const float* in, std::size_t n);
    // out[i] = in[i] >= theta
    void (*threshold)(std::uint8_t* out, const float* in, float theta, std::size_t n);
    // y binary, p in [0,1]
    JaccardSums (*jaccard_sums)(const std::uint8_t* y, const float* p, std::size_t n);
    // pred in {0,1}; label codes 0 bg, 1 fg, 2 shadow (bg), >= 3 ignored; roi in {0,1}
    ConfusionTally (*confusion)(const std::uint8_t* pred, const std::uint8_t* label,
                                const std::uint8_t* roi, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
#if defined(BGAUG_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif
#if defined(BGAUG_HAVE_NEON)
const KernelTable& neon_kernels() noexcept;
#endif

/// Kernels for the given ISA, or nullptr when not built or not supported by this CPU.
const KernelTable* kernels_for(Isa isa) noexcept;

/// All tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Table selected for this process: BGAUG_ISA env var (scalar|avx2|neon) if
/// set and usable, otherwise the widest supported ISA.
const KernelTable& active() noexcept;

/// Overrides the selection; returns false if the ISA is unavailable.
bool force_isa(Isa isa) noexcept;

/// Parses "scalar", "avx2", "neon".
bool parse_isa(std::string_view name, Isa& out) noexcept;

/// Final fixed-order reduction of the 8 striped lanes.
inline double reduce_lanes(const double* lanes) noexcept {
    const double t0 = lanes[0] + lanes[4];
    const double t1 = lanes[1] + lanes[5];
    const double t2 = lanes[2] + lanes[6];
    const double t3 = lanes[3] + lanes[7];
    return (t0 + t2) + (t1 + t3);
}

} // namespace bgaug::simd
