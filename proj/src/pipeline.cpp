#include "bgaug/pipeline.hpp"

#include "bgaug/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <thread>

namespace bgaug {

CropSpec AugmentationPlan::empty_spec() const noexcept {
    return {current.center_row + shift_empty_row, current.center_col + shift_empty_col, current.height,
            current.width};
}

CropSpec AugmentationPlan::recent_spec() const noexcept {
    return {current.center_row + shift_recent_row, current.center_col + shift_recent_col, current.height,
            current.width};
}

namespace {

std::vector<PixelWindow> zoom_windows(const CropSpec& base, double z, int steps) {
    std::vector<PixelWindow> out;
    for (int n = 0; n < steps; ++n) {
        const double f = 1.0 + n * z;
        out.push_back(resolve_window({base.center_row, base.center_col, base.height * f, base.width * f}));
    }
    return out;
}

std::vector<PixelWindow> pan_windows(const CropSpec& base, double dr, double dc, int steps) {
    std::vector<PixelWindow> out;
    for (int n = 0; n < steps; ++n)
        out.push_back(resolve_window({base.center_row + n * dr, base.center_col + n * dc, base.height, base.width}));
    return out;
}

double signed_draw(RandomStream& rng, const UniformRange& r) {
    const double mag = rng.uniform(r.lo, r.hi);
    return rng.bernoulli(0.5) ? mag : -mag;
}

// Inclusive range of integer top-left offsets such that every window (given
// relative to top-left 0) lies inside [0, extent).
struct Feasible {
    long lo;
    long hi;
};

} // namespace

PlanWindows plan_windows(const AugmentationPlan& p) {
    PlanWindows w;
    w.current = resolve_window(p.current);
    switch (p.kind) {
    case CropKind::Aligned:
        w.empty = {w.current};
        w.recent = {w.current};
        break;
    case CropKind::Shifted:
        w.empty = {resolve_window(p.empty_spec())};
        w.recent = {resolve_window(p.recent_spec())};
        break;
    case CropKind::ZoomIn:
    case CropKind::ZoomOut:
        w.empty = zoom_windows(p.current, p.zoom.z_empty, p.zoom.steps);
        w.recent = zoom_windows(p.current, p.zoom.z_recent, p.zoom.steps);
        break;
    case CropKind::PanLeft:
    case CropKind::PanRight:
        w.empty = pan_windows(p.current, p.pan.shift_row, p.pan.shift_col, p.pan.steps_empty);
        w.recent = pan_windows(p.current, p.pan.shift_row, p.pan.shift_col, p.pan.steps_recent);
        break;
    }
    return w;
}

AugmentationPlan sample_augmentation(const AugmentationConfig& cfg, std::size_t source_height,
                                     std::size_t source_width, RandomStream& rng) {
    if (auto problems = validate_config(cfg); !problems.empty())
        throw Error(ErrorCode::InvalidConfig, problems.front());

    AugmentationPlan p;
    p.out_height = cfg.out_height;
    p.out_width = cfg.out_width;
    p.kind = cfg.enabled_crops[rng.below(cfg.enabled_crops.size())];

    // Kind-specific parameters first; the window extents depend on them.
    switch (p.kind) {
    case CropKind::Aligned: break;
    case CropKind::Shifted:
        p.shift_empty_row = signed_draw(rng, cfg.shift_range);
        p.shift_empty_col = signed_draw(rng, cfg.shift_range);
        p.shift_recent_row = signed_draw(rng, cfg.shift_range);
        p.shift_recent_col = signed_draw(rng, cfg.shift_range);
        break;
    case CropKind::ZoomIn:
        p.zoom.z_empty = rng.uniform(cfg.zoom_in_empty.lo, cfg.zoom_in_empty.hi);
        p.zoom.z_recent = rng.uniform(cfg.zoom_in_recent.lo, cfg.zoom_in_recent.hi);
        p.zoom.steps = cfg.zoom_steps;
        break;
    case CropKind::ZoomOut:
        p.zoom.z_empty = rng.uniform(cfg.zoom_out_empty.lo, cfg.zoom_out_empty.hi);
        p.zoom.z_recent = rng.uniform(cfg.zoom_out_recent.lo, cfg.zoom_out_recent.hi);
        p.zoom.steps = cfg.zoom_steps;
        break;
    case CropKind::PanLeft:
    case CropKind::PanRight: {
        const double horizontal = rng.uniform(cfg.pan_horizontal.lo, cfg.pan_horizontal.hi);
        p.pan.shift_col = p.kind == CropKind::PanRight ? horizontal : -horizontal;
        p.pan.shift_row = cfg.pan_vertical.hi > 0.0 ? signed_draw(rng, cfg.pan_vertical) : 0.0;
        p.pan.steps_empty = cfg.pan_steps_empty;
        p.pan.steps_recent = cfg.pan_steps_recent;
        break;
    }
    }

    // Resolve all windows with the crop's top-left at (0, 0), then intersect
    // the admissible offsets. Fractional windows get one pixel of slack so a
    // rounding difference in ceil() cannot push them out of bounds.
    const auto oh = static_cast<long>(cfg.out_height);
    const auto ow = static_cast<long>(cfg.out_width);
    p.current = window_spec(0, 0, oh, ow);
    const PlanWindows rel = plan_windows(p);
    const bool fractional = p.kind != CropKind::Aligned;
    const long slack = fractional ? 1 : 0;
    Feasible rows{0, static_cast<long>(source_height) - oh};
    Feasible cols{0, static_cast<long>(source_width) - ow};
    auto tighten = [&](const PixelWindow& w) {
        rows.lo = std::max(rows.lo, -w.row0 + (w.row0 != 0 ? slack : 0));
        rows.hi = std::min(rows.hi, static_cast<long>(source_height) - w.row1 - (w.row1 != oh ? slack : 0));
        cols.lo = std::max(cols.lo, -w.col0 + (w.col0 != 0 ? slack : 0));
        cols.hi = std::min(cols.hi, static_cast<long>(source_width) - w.col1 - (w.col1 != ow ? slack : 0));
    };
    tighten(rel.current);
    for (const auto& w : rel.empty) tighten(w);
    for (const auto& w : rel.recent) tighten(w);
    if (rows.lo > rows.hi || cols.lo > cols.hi)
        throw Error(ErrorCode::OutOfBounds,
                    fmt::format("{}x{} source too small for a {}x{} {} crop", source_height, source_width, oh, ow,
                                to_string(p.kind)));
    const long row0 = rows.lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(rows.hi - rows.lo + 1)));
    const long col0 = cols.lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(cols.hi - cols.lo + 1)));
    p.current = window_spec(row0, col0, oh, ow);

    // d_C = d_R = I + I_k; d_E = d_C + I^E + I^E_k.
    const double global = rng.normal(0.0, cfg.illum_global_sigma);
    const double global_empty = rng.normal(0.0, cfg.illum_empty_global_sigma);
    for (std::size_t k = 0; k < 3; ++k) {
        const double dc = global + rng.normal(0.0, cfg.illum_channel_sigma);
        p.illumination.d_current[k] = dc;
        p.illumination.d_recent[k] = dc;
        p.illumination.d_empty[k] = dc + global_empty + rng.normal(0.0, cfg.illum_empty_channel_sigma);
    }

    p.ioa = rng.bernoulli(cfg.ioa_probability);
    p.donor_pick = rng.uniform01();
    p.donor_row_u = rng.uniform01();
    p.donor_col_u = rng.uniform01();

    p.noise_sigma = cfg.noise_sigma;
    p.noise_seed = rng.next_u64();
    return p;
}

AugmentationPlan sample_augmentation(const AugmentationConfig& cfg, std::size_t source_height,
                                     std::size_t source_width, std::uint64_t seed) {
    RandomStream rng(seed);
    return sample_augmentation(cfg, source_height, source_width, rng);
}

std::size_t donor_index(const AugmentationPlan& plan, std::size_t pool_size) noexcept {
    if (pool_size == 0) return 0;
    return std::min(static_cast<std::size_t>(plan.donor_pick * static_cast<double>(pool_size)), pool_size - 1);
}

SampleTriplet apply_crop(const SampleTriplet& t, const AugmentationPlan& p) {
    switch (p.kind) {
    case CropKind::Aligned: return spatially_aligned_crop(t, p.current);
    case CropKind::Shifted: return randomly_shifted_crop(t, p.empty_spec(), p.recent_spec(), p.current);
    case CropKind::ZoomIn:
    case CropKind::ZoomOut: return ptz_zoom_crop(t, p.current, p.zoom);
    case CropKind::PanLeft:
    case CropKind::PanRight: return ptz_pan_crop(t, p.current, p.pan);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown crop kind");
}

SampleTriplet donor_crop(const SampleTriplet& donor, const AugmentationPlan& p) {
    const long h = static_cast<long>(p.out_height);
    const long w = static_cast<long>(p.out_width);
    const long dh = static_cast<long>(donor.height());
    const long dw = static_cast<long>(donor.width());
    if (dh < h || dw < w) throw Error(ErrorCode::OutOfBounds, "donor smaller than the crop");
    const long r0 = std::min(static_cast<long>(p.donor_row_u * static_cast<double>(dh - h + 1)), dh - h);
    const long c0 = std::min(static_cast<long>(p.donor_col_u * static_cast<double>(dw - w + 1)), dw - w);
    return spatially_aligned_crop(donor, window_spec(r0, c0, h, w));
}

SampleTriplet apply_plan(const SampleTriplet& t, const SampleTriplet* donor, const AugmentationPlan& p) {
    if (p.ioa && donor == nullptr) throw Error(ErrorCode::MissingDonor, "plan requests intermittent object addition");

    SampleTriplet out = illumination_shift(apply_crop(t, p), p.illumination);
    if (p.ioa) out = intermittent_object_add(out, donor_crop(*donor, p));
    if (p.noise_sigma > 0.0) out = add_gaussian_noise(out, {p.noise_sigma}, p.noise_seed);
    return out;
}

std::vector<AugmentedSample> make_batch(std::span<const SampleTriplet* const> samples,
                                        std::span<const SampleTriplet* const> donors,
                                        const AugmentationConfig& cfg, std::uint64_t master_seed,
                                        std::size_t batch_size, unsigned workers, std::size_t first_index) {
    if (batch_size == 0) return {};
    if (samples.empty()) throw Error(ErrorCode::EmptyInput, "make_batch needs at least one sample");
    if (cfg.ioa_probability > 0.0 && donors.empty())
        throw Error(ErrorCode::EmptyDonorPool, "ioa_probability > 0 but the donor pool is empty");

    const RandomStream master(master_seed);
    std::vector<AugmentedSample> out(batch_size);
    auto run_one = [&](std::size_t k) {
        const std::size_t global = first_index + k;
        RandomStream rng = master.split(global);
        AugmentedSample& s = out[k];
        s.source_index = global % samples.size();
        const SampleTriplet& src = *samples[s.source_index];
        s.plan = sample_augmentation(cfg, src.height(), src.width(), rng);
        const SampleTriplet* donor = nullptr;
        if (s.plan.ioa) {
            s.donor = donor_index(s.plan, donors.size());
            donor = donors[*s.donor];
        }
        s.triplet = apply_plan(src, donor, s.plan);
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(batch_size)));
    if (workers == 1) {
        for (std::size_t k = 0; k < batch_size; ++k) run_one(k);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < batch_size; k += workers) run_one(k);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::string plan_log_header() {
    return "index,source,kind,row0,col0,out_height,out_width,shift_empty_row,shift_empty_col,"
           "shift_recent_row,shift_recent_col,zoom_empty,zoom_recent,zoom_steps,pan_row,pan_col,"
           "pan_steps_empty,pan_steps_recent,d_empty_r,d_empty_g,d_empty_b,d_recent_r,d_recent_g,d_recent_b,"
           "d_current_r,d_current_g,d_current_b,ioa,donor,noise_sigma,noise_seed";
}

std::string plan_log_row(std::size_t index, const AugmentedSample& s) {
    const auto& p = s.plan;
    const PixelWindow w = resolve_window(p.current);
    const auto& il = p.illumination;
    return fmt::format("{},{},{},{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{:.17g},{:.17g},{},{},"
                       "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{},{:.17g},{}",
                       index, s.source_index, to_string(p.kind), w.row0, w.col0, p.out_height, p.out_width,
                       p.shift_empty_row, p.shift_empty_col, p.shift_recent_row, p.shift_recent_col, p.zoom.z_empty,
                       p.zoom.z_recent, p.zoom.steps, p.pan.shift_row, p.pan.shift_col, p.pan.steps_empty,
                       p.pan.steps_recent, il.d_empty[0], il.d_empty[1], il.d_empty[2], il.d_recent[0],
                       il.d_recent[1], il.d_recent[2], il.d_current[0], il.d_current[1], il.d_current[2],
                       p.ioa ? 1 : 0, s.donor ? fmt::format("{}", *s.donor) : std::string("-"), p.noise_sigma,
                       p.noise_seed);
}

} // namespace bgaug
