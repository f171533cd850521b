#pragma once

#include "bgaug/config.hpp"
#include "bgaug/crop.hpp"
#include "bgaug/image.hpp"
#include "bgaug/photometric.hpp"
#include "bgaug/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bgaug {

/// Fully concrete parameters for one augmented sample.
struct AugmentationPlan {
    CropKind kind = CropKind::Aligned;
    std::size_t out_height = 0;
    std::size_t out_width = 0;

    // Window of current/label; for aligned/zoom/pan also the base of empty/recent.
    CropSpec current;
    // Shifted crop only: signed per-axis offsets of the empty/recent centers.
    double shift_empty_row = 0.0;
    double shift_empty_col = 0.0;
    double shift_recent_row = 0.0;
    double shift_recent_col = 0.0;

    ZoomParams zoom;
    PanParams pan;
    IlluminationParams illumination;

    bool ioa = false;
    // Uniform draws in [0,1) resolved against the donor pool and donor size.
    double donor_pick = 0.0;
    double donor_row_u = 0.0;
    double donor_col_u = 0.0;

    double noise_sigma = 0.0;
    std::uint64_t noise_seed = 0;

    CropSpec empty_spec() const noexcept;
    CropSpec recent_spec() const noexcept;
};

/// Every window the plan reads from the empty, recent and current slots.
struct PlanWindows {
    std::vector<PixelWindow> empty;
    std::vector<PixelWindow> recent;
    PixelWindow current;
};
PlanWindows plan_windows(const AugmentationPlan& plan);

/// Draws a plan for a source of the given size. The crop center is drawn
/// from the rectangle where every window of the chosen augmentation fits;
/// throws OutOfBounds if that rectangle is empty.
AugmentationPlan sample_augmentation(const AugmentationConfig& cfg, std::size_t source_height,
                                     std::size_t source_width, RandomStream& rng);
AugmentationPlan sample_augmentation(const AugmentationConfig& cfg, std::size_t source_height,
                                     std::size_t source_width, std::uint64_t seed);

/// crop -> illumination -> intermittent object (donor cropped with its own
/// aligned window) -> noise. Throws MissingDonor if the plan needs a donor.
SampleTriplet apply_plan(const SampleTriplet& t, const SampleTriplet* donor, const AugmentationPlan& plan);

/// The crop and donor stages of apply_plan on their own.
SampleTriplet apply_crop(const SampleTriplet& t, const AugmentationPlan& plan);
/// Aligned out_height x out_width window of the donor at the plan's position.
SampleTriplet donor_crop(const SampleTriplet& donor, const AugmentationPlan& plan);

/// Index of the donor selected by the plan within a pool of pool_size.
std::size_t donor_index(const AugmentationPlan& plan, std::size_t pool_size) noexcept;

struct AugmentedSample {
    SampleTriplet triplet;
    AugmentationPlan plan;
    std::size_t source_index = 0;
    std::optional<std::size_t> donor;
};

/// Batch element k uses samples[k % samples.size()] and a plan drawn from
/// split(master_seed, k), so output is independent of worker count.
std::vector<AugmentedSample> make_batch(std::span<const SampleTriplet* const> samples,
                                        std::span<const SampleTriplet* const> donors,
                                        const AugmentationConfig& cfg, std::uint64_t master_seed,
                                        std::size_t batch_size, unsigned workers = 1,
                                        std::size_t first_index = 0);

/// One CSV line (no newline) describing every sampled parameter; see plan_log_header().
std::string plan_log_header();
std::string plan_log_row(std::size_t index, const AugmentedSample& s);

} // namespace bgaug
