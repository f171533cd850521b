#pragma once

#include <array>
#include <cstdint>

namespace bgaug {

/// Philox4x32-10 block function (Salmon et al., Random123). Pure: the same
/// (counter, key) always maps to the same output on every platform.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Sequential stream over Philox blocks. The key is the stream identity; the
/// low 64 counter bits walk the stream, the high 64 bits hold a sub-stream tag.
///
/// Uniforms use 53 bits from two consecutive words; normals use the Box-Muller
/// transform (cos branch first, sin branch cached). Neither depends on
/// std::*_distribution, whose output is implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t tag = 0) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1).
    double uniform01() noexcept;
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept;
    /// Uniform integer on [0, n); n > 0. Uses rejection, no modulo bias.
    std::uint64_t below(std::uint64_t n) noexcept;
    /// Standard normal.
    double normal() noexcept;
    double normal(double mean, double sigma) noexcept { return mean + sigma * normal(); }
    bool bernoulli(double p) noexcept { return uniform01() < p; }

    /// Independent child stream; children with distinct ids never overlap
    /// the parent or each other. Does not advance the parent.
    RandomStream split(std::uint64_t id) const noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

private:
    RandomStream(PhiloxKey key, std::uint64_t tag) noexcept;

    PhiloxKey key_{};
    std::uint64_t seed_ = 0;
    std::uint64_t tag_ = 0;
    std::uint64_t block_ = 0;
    PhiloxCounter buffer_{};
    int used_ = 4;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace bgaug
