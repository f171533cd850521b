#include "bgaug/bench.hpp"

#include "bgaug/pipeline.hpp"
#include "bgaug/simd/kernels.hpp"
#include "bgaug/synthetic.hpp"

#include <algorithm>
#include <chrono>

namespace bgaug {

std::string_view to_string(BenchStage s) noexcept {
    switch (s) {
    case BenchStage::Ingest: return "ingest";
    case BenchStage::Crop: return "crop";
    case BenchStage::Illumination: return "illumination";
    case BenchStage::Ioa: return "ioa";
    case BenchStage::Noise: return "noise";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::uint8_t> to_u8(const MultiChannelImage& img) {
    std::vector<std::uint8_t> out(img.size());
    simd::active().unit_to_u8(out.data(), img.data().data(), img.size());
    return out;
}

struct RawTriplet {
    std::size_t h, w, c;
    std::vector<std::uint8_t> empty, recent, current, label;
};

MultiChannelImage ingest(const std::vector<std::uint8_t>& raw, std::size_t h, std::size_t w, std::size_t c) {
    std::vector<float> data(raw.size());
    simd::active().u8_to_unit(data.data(), raw.data(), raw.size());
    return MultiChannelImage(h, w, c, std::move(data));
}

} // namespace

BenchResult run_bench(AugmentationConfig cfg, std::size_t height, std::size_t width, double seconds,
                      std::uint64_t seed, std::size_t max_triplets, bool keep_out_size) {
    if (!keep_out_size) {
        // Largest crop up to 2/3 of the source that every enabled augmentation can still fit.
        const double zoom = 1.0 + std::max(0, cfg.zoom_steps - 1) *
                                      std::max(cfg.zoom_in_empty.hi, cfg.zoom_in_recent.hi);
        const int pan_steps = std::max({cfg.pan_steps_empty, cfg.pan_steps_recent, 1}) - 1;
        const double pan_w = pan_steps * cfg.pan_horizontal.hi + 2.0 * cfg.shift_range.hi + 2.0;
        const double pan_h = pan_steps * cfg.pan_vertical.hi + 2.0 * cfg.shift_range.hi + 2.0;
        auto fit = [](std::size_t src, double zoom, double margin) {
            const double by_zoom = static_cast<double>(src) / zoom - 2.0;
            const double by_pan = static_cast<double>(src) - margin;
            const double v = std::min({static_cast<double>(src * 2 / 3), by_zoom, by_pan});
            return v < 1.0 ? std::size_t{1} : static_cast<std::size_t>(v);
        };
        cfg.out_height = fit(height, zoom, pan_h);
        cfg.out_width = fit(width, zoom, pan_w);
    }
    const SampleTriplet src = synthetic_triplet(height, width, 4, 0);
    const SampleTriplet donor = synthetic_triplet(height, width, 4, 1);
    const RawTriplet raw{height, width, 4, to_u8(src.empty), to_u8(src.recent), to_u8(src.current),
                         {src.label.data().begin(), src.label.data().end()}};

    BenchResult res;
    res.height = height;
    res.width = width;
    RandomStream rng(seed);
    const auto start = Clock::now();
    const auto budget = std::chrono::duration<double>(seconds);
    auto lap = [&](BenchStage s, Clock::time_point& t0) {
        const auto t1 = Clock::now();
        res.stage_seconds[static_cast<std::size_t>(s)] += std::chrono::duration<double>(t1 - t0).count();
        t0 = t1;
    };

    while (res.triplets < max_triplets && Clock::now() - start < budget) {
        const AugmentationPlan plan = sample_augmentation(cfg, height, width, rng);
        auto t0 = Clock::now();
        SampleTriplet in{ingest(raw.empty, raw.h, raw.w, raw.c), ingest(raw.recent, raw.h, raw.w, raw.c),
                         ingest(raw.current, raw.h, raw.w, raw.c), ForegroundMask(raw.h, raw.w, raw.label)};
        lap(BenchStage::Ingest, t0);
        SampleTriplet out = apply_crop(in, plan);
        lap(BenchStage::Crop, t0);
        out = illumination_shift(out, plan.illumination);
        lap(BenchStage::Illumination, t0);
        if (plan.ioa) out = intermittent_object_add(out, donor_crop(donor, plan));
        lap(BenchStage::Ioa, t0);
        if (plan.noise_sigma > 0.0) out = add_gaussian_noise(out, {plan.noise_sigma}, plan.noise_seed);
        lap(BenchStage::Noise, t0);
        ++res.triplets;
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

} // namespace bgaug
