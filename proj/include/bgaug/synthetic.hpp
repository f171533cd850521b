#pragma once

#include "bgaug/image.hpp"

#include <cstdint>

namespace bgaug {

/// Deterministic scene for demos and benchmarks: color ramps as background and
/// one solid square as foreground in the current frame. `variant` moves the
/// square. With 4 channels the last one is the label (current) or 0.
SampleTriplet synthetic_triplet(std::size_t height, std::size_t width, std::size_t channels = 4,
                                std::uint64_t variant = 0);

} // namespace bgaug
