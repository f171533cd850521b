#pragma once

#include "bgaug/image.hpp"

#include <array>
#include <cstdint>

namespace bgaug {

/// RGB offsets per slot, in normalized [0,1] units.
struct IlluminationParams {
    std::array<double, 3> d_empty{};
    std::array<double, 3> d_recent{};
    std::array<double, 3> d_current{};
};

struct NoiseParams {
    double sigma = 0.0;
};

/// Adds the slot's offset to channels 0..2 of empty/recent/current and clamps
/// to [0,1]. The FPM channel and the label are not touched.
SampleTriplet illumination_shift(const SampleTriplet& t, const IlluminationParams& ip);

/// Zero-mean Gaussian noise on channels 0..2 of the three images, clamped to
/// [0,1]. The draw for element e of slot s depends only on (seed, s, e).
SampleTriplet add_gaussian_noise(const SampleTriplet& t, const NoiseParams& np, std::uint64_t seed);

/// Pastes the donor's foreground pixels (all channels) into current and
/// recent; empty passes through. Label = m + (1 - m) * label with m the donor
/// label. Throws DimensionMismatch on shape disagreement.
SampleTriplet intermittent_object_add(const SampleTriplet& base, const SampleTriplet& iom);

} // namespace bgaug
