#include "bgaug/rng.hpp"

#include <cmath>
#include <numbers>

namespace bgaug {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

PhiloxKey key_from_seed(std::uint64_t seed) noexcept {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

} // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t tag) noexcept
    : key_(key_from_seed(seed)), seed_(seed), tag_(tag) {}

RandomStream::RandomStream(PhiloxKey key, std::uint64_t tag) noexcept
    : key_(key), seed_(static_cast<std::uint64_t>(key[1]) << 32 | key[0]), tag_(tag) {}

std::uint32_t RandomStream::next_u32() noexcept {
    if (used_ == 4) {
        buffer_ = philox4x32_10({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                                 static_cast<std::uint32_t>(tag_), static_cast<std::uint32_t>(tag_ >> 32)},
                                key_);
        ++block_;
        used_ = 0;
    }
    return buffer_[used_++];
}

std::uint64_t RandomStream::next_u64() noexcept {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return hi << 32 | lo;
}

double RandomStream::uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

std::uint64_t RandomStream::below(std::uint64_t n) noexcept {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

double RandomStream::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

RandomStream RandomStream::split(std::uint64_t id) const noexcept {
    // Child key = Philox(parent key) applied to (id, tag, domain marker).
    const PhiloxCounter derived =
        philox4x32_10({static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32),
                       static_cast<std::uint32_t>(tag_), 0x53504C54u /* "SPLT" */},
                      key_);
    return RandomStream(PhiloxKey{derived[0], derived[1]}, static_cast<std::uint64_t>(derived[2]) << 32 | derived[3]);
}

} // namespace bgaug
