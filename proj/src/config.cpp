#include "bgaug/config.hpp"

#include "bgaug/error.hpp"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace bgaug {

std::string_view to_string(CropKind kind) noexcept {
    switch (kind) {
    case CropKind::Aligned: return "aligned";
    case CropKind::Shifted: return "shifted";
    case CropKind::ZoomIn: return "ptz_zoom_in";
    case CropKind::ZoomOut: return "ptz_zoom_out";
    case CropKind::PanLeft: return "ptz_pan_left";
    case CropKind::PanRight: return "ptz_pan_right";
    }
    return "unknown";
}

bool parse_crop_kind(std::string_view name, CropKind& out) noexcept {
    for (CropKind k : kAllCropKinds) {
        if (name == to_string(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

std::vector<std::string> validate_config(const AugmentationConfig& c) {
    std::vector<std::string> out;
    auto range = [&](const UniformRange& r, const char* name) {
        if (!(r.lo <= r.hi)) out.push_back(fmt::format("{}: lo > hi", name));
    };
    if (c.out_height < 1 || c.out_width < 1) out.push_back("out_height/out_width must be >= 1");
    if (c.enabled_crops.empty()) out.push_back("enabled_crops must not be empty");
    range(c.shift_range, "shift_range");
    if (c.shift_range.lo < 0) out.push_back("shift_range is a magnitude; lo must be >= 0");
    range(c.zoom_in_recent, "zoom_in_recent");
    range(c.zoom_in_empty, "zoom_in_empty");
    range(c.zoom_out_recent, "zoom_out_recent");
    range(c.zoom_out_empty, "zoom_out_empty");
    range(c.pan_horizontal, "pan_horizontal");
    range(c.pan_vertical, "pan_vertical");
    if (c.pan_horizontal.lo < 0 || c.pan_vertical.lo < 0) out.push_back("pan ranges are magnitudes; lo must be >= 0");
    if (c.zoom_steps < 1) out.push_back("zoom_steps must be >= 1");
    if (c.pan_steps_empty < 1 || c.pan_steps_recent < 1) out.push_back("pan steps must be >= 1");
    for (double s : {c.illum_global_sigma, c.illum_channel_sigma, c.illum_empty_global_sigma,
                     c.illum_empty_channel_sigma, c.noise_sigma})
        if (!(s >= 0)) out.push_back("sigmas must be >= 0");
    if (!(c.ioa_probability >= 0 && c.ioa_probability <= 1)) out.push_back("ioa_probability must be in [0,1]");
    if (!(c.threshold >= 0 && c.threshold <= 1)) out.push_back("threshold must be in [0,1]");
    const auto& t = c.training;
    if (!(t.learning_rate > 0 && t.adam_beta1 > 0 && t.adam_beta2 > 0 && t.batch_size > 0 && t.epochs > 0 &&
          t.jaccard_smoothing > 0))
        out.push_back("training hyperparameters must be positive");
    return out;
}

namespace {

UniformRange read_range(const YAML::Node& n, const std::string& key) {
    if (!n.IsSequence() || n.size() != 2)
        throw Error(ErrorCode::InvalidConfig, fmt::format("{}: expected [lo, hi]", key));
    return {n[0].as<double>(), n[1].as<double>()};
}

} // namespace

AugmentationConfig parse_config(std::string_view yaml_text) {
    AugmentationConfig c;
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml_text));
    } catch (const YAML::Exception& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
    if (root.IsNull()) return c;
    if (!root.IsMap()) throw Error(ErrorCode::InvalidConfig, "config must be a key-value mapping");

    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        const YAML::Node& v = kv.second;
        try {
            if (key == "out_height") c.out_height = v.as<std::size_t>();
            else if (key == "out_width") c.out_width = v.as<std::size_t>();
            else if (key == "enabled_crops") {
                c.enabled_crops.clear();
                for (const auto& item : v) {
                    CropKind k;
                    const auto name = item.as<std::string>();
                    if (!parse_crop_kind(name, k))
                        throw Error(ErrorCode::InvalidConfig, fmt::format("unknown crop kind '{}'", name));
                    c.enabled_crops.push_back(k);
                }
            }
            else if (key == "shift_range") c.shift_range = read_range(v, key);
            else if (key == "zoom_in_recent") c.zoom_in_recent = read_range(v, key);
            else if (key == "zoom_in_empty") c.zoom_in_empty = read_range(v, key);
            else if (key == "zoom_out_recent") c.zoom_out_recent = read_range(v, key);
            else if (key == "zoom_out_empty") c.zoom_out_empty = read_range(v, key);
            else if (key == "zoom_steps") c.zoom_steps = v.as<int>();
            else if (key == "pan_horizontal") c.pan_horizontal = read_range(v, key);
            else if (key == "pan_vertical") c.pan_vertical = read_range(v, key);
            else if (key == "pan_steps_empty") c.pan_steps_empty = v.as<int>();
            else if (key == "pan_steps_recent") c.pan_steps_recent = v.as<int>();
            else if (key == "illum_global_sigma") c.illum_global_sigma = v.as<double>();
            else if (key == "illum_channel_sigma") c.illum_channel_sigma = v.as<double>();
            else if (key == "illum_empty_global_sigma") c.illum_empty_global_sigma = v.as<double>();
            else if (key == "illum_empty_channel_sigma") c.illum_empty_channel_sigma = v.as<double>();
            else if (key == "ioa_probability") c.ioa_probability = v.as<double>();
            else if (key == "noise_sigma") c.noise_sigma = v.as<double>();
            else if (key == "threshold") c.threshold = v.as<double>();
            else if (key == "learning_rate") c.training.learning_rate = v.as<double>();
            else if (key == "adam_beta1") c.training.adam_beta1 = v.as<double>();
            else if (key == "adam_beta2") c.training.adam_beta2 = v.as<double>();
            else if (key == "batch_size") c.training.batch_size = v.as<int>();
            else if (key == "epochs") c.training.epochs = v.as<int>();
            else if (key == "jaccard_smoothing") c.training.jaccard_smoothing = v.as<double>();
            else throw Error(ErrorCode::InvalidConfig, fmt::format("unknown key '{}'", key));
        } catch (const YAML::Exception& e) {
            throw Error(ErrorCode::InvalidConfig, fmt::format("{}: {}", key, e.what()));
        }
    }
    if (auto problems = validate_config(c); !problems.empty())
        throw Error(ErrorCode::InvalidConfig, fmt::format("{}", fmt::join(problems, "; ")));
    return c;
}

AugmentationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidConfig, fmt::format("cannot open config '{}'", path.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const AugmentationConfig& c) {
    YAML::Emitter e;
    e.SetDoublePrecision(17);
    auto range = [&](const char* key, const UniformRange& r) {
        e << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq << r.lo << r.hi << YAML::EndSeq;
    };
    e << YAML::BeginMap;
    e << YAML::Key << "out_height" << YAML::Value << c.out_height;
    e << YAML::Key << "out_width" << YAML::Value << c.out_width;
    e << YAML::Key << "enabled_crops" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (auto k : c.enabled_crops) e << std::string(to_string(k));
    e << YAML::EndSeq;
    range("shift_range", c.shift_range);
    range("zoom_in_recent", c.zoom_in_recent);
    range("zoom_in_empty", c.zoom_in_empty);
    range("zoom_out_recent", c.zoom_out_recent);
    range("zoom_out_empty", c.zoom_out_empty);
    e << YAML::Key << "zoom_steps" << YAML::Value << c.zoom_steps;
    range("pan_horizontal", c.pan_horizontal);
    range("pan_vertical", c.pan_vertical);
    e << YAML::Key << "pan_steps_empty" << YAML::Value << c.pan_steps_empty;
    e << YAML::Key << "pan_steps_recent" << YAML::Value << c.pan_steps_recent;
    e << YAML::Key << "illum_global_sigma" << YAML::Value << c.illum_global_sigma;
    e << YAML::Key << "illum_channel_sigma" << YAML::Value << c.illum_channel_sigma;
    e << YAML::Key << "illum_empty_global_sigma" << YAML::Value << c.illum_empty_global_sigma;
    e << YAML::Key << "illum_empty_channel_sigma" << YAML::Value << c.illum_empty_channel_sigma;
    e << YAML::Key << "ioa_probability" << YAML::Value << c.ioa_probability;
    e << YAML::Key << "noise_sigma" << YAML::Value << c.noise_sigma;
    e << YAML::Key << "threshold" << YAML::Value << c.threshold;
    e << YAML::Key << "learning_rate" << YAML::Value << c.training.learning_rate;
    e << YAML::Key << "adam_beta1" << YAML::Value << c.training.adam_beta1;
    e << YAML::Key << "adam_beta2" << YAML::Value << c.training.adam_beta2;
    e << YAML::Key << "batch_size" << YAML::Value << c.training.batch_size;
    e << YAML::Key << "epochs" << YAML::Value << c.training.epochs;
    e << YAML::Key << "jaccard_smoothing" << YAML::Value << c.training.jaccard_smoothing;
    e << YAML::EndMap;
    return std::string(e.c_str()) + "\n";
}

} // namespace bgaug
