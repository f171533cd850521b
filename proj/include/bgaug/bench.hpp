#pragma once

#include "bgaug/config.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace bgaug {

enum class BenchStage { Ingest, Crop, Illumination, Ioa, Noise };
inline constexpr std::array<BenchStage, 5> kBenchStages{BenchStage::Ingest, BenchStage::Crop,
                                                        BenchStage::Illumination, BenchStage::Ioa,
                                                        BenchStage::Noise};
std::string_view to_string(BenchStage s) noexcept;

struct BenchResult {
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t triplets = 0;
    double seconds = 0.0;                 // wall time of the measured loop
    std::array<double, 5> stage_seconds{}; // summed per stage

    double triplets_per_second() const noexcept { return seconds > 0.0 ? static_cast<double>(triplets) / seconds : 0.0; }
};

/// Single-threaded augmentation of a synthetic height x width x 4 source
/// (8-bit planes converted on every iteration) until `seconds` elapse or
/// max_triplets are done. Unless keep_out_size is set, the crop is the
/// largest size up to 2/3 of the source that every enabled augmentation fits.
BenchResult run_bench(AugmentationConfig cfg, std::size_t height, std::size_t width, double seconds,
                      std::uint64_t seed, std::size_t max_triplets = SIZE_MAX, bool keep_out_size = false);

} // namespace bgaug
