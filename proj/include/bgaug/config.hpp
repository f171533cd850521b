#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bgaug {

enum class CropKind { Aligned, Shifted, ZoomIn, ZoomOut, PanLeft, PanRight };

inline constexpr CropKind kAllCropKinds[] = {CropKind::Aligned, CropKind::Shifted, CropKind::ZoomIn,
                                             CropKind::ZoomOut, CropKind::PanLeft, CropKind::PanRight};

std::string_view to_string(CropKind kind) noexcept;
bool parse_crop_kind(std::string_view name, CropKind& out) noexcept;

/// Closed-open uniform range [lo, hi). lo == hi is a point mass.
struct UniformRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Optimizer settings forwarded to external trainers; nothing here consumes them.
struct TrainingHyperparams {
    double learning_rate = 1e-4;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.99;
    int batch_size = 8;
    int epochs = 200;
    double jaccard_smoothing = 1.0;
};

/// Every knob of the online augmentation. Defaults are the reference
/// training setup; out_height/out_width are ours (see README).
struct AugmentationConfig {
    std::size_t out_height = 160;
    std::size_t out_width = 160;
    std::vector<CropKind> enabled_crops{std::begin(kAllCropKinds), std::end(kAllCropKinds)};

    // Magnitude of the per-axis jitter between slots; the sign is a fair coin.
    UniformRange shift_range{0.0, 5.0};

    UniformRange zoom_in_recent{0.0, 0.02};
    UniformRange zoom_in_empty{0.0, 0.04};
    UniformRange zoom_out_recent{-0.02, 0.0};
    UniformRange zoom_out_empty{-0.04, 0.0};
    int zoom_steps = 10;

    // Magnitudes; pan_left/pan_right fix the horizontal sign.
    UniformRange pan_horizontal{0.0, 5.0};
    UniformRange pan_vertical{0.0, 0.0};
    int pan_steps_empty = 20;
    int pan_steps_recent = 10;

    double illum_global_sigma = 0.1;
    double illum_channel_sigma = 0.04;
    double illum_empty_global_sigma = 0.1;
    double illum_empty_channel_sigma = 0.04;

    double ioa_probability = 0.10;
    double noise_sigma = 0.01;
    double threshold = 0.5;

    TrainingHyperparams training;
};

/// Empty when valid; otherwise one message per problem.
std::vector<std::string> validate_config(const AugmentationConfig& cfg);

/// Reads a flat YAML mapping; absent keys keep their defaults, unknown keys
/// are rejected. Throws Error(InvalidConfig) on any problem.
AugmentationConfig load_config(const std::filesystem::path& path);
AugmentationConfig parse_config(std::string_view yaml_text);
std::string dump_config(const AugmentationConfig& cfg);

} // namespace bgaug
