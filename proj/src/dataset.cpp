#include "bgaug/dataset.hpp"

#include "bgaug/error.hpp"

#include <fmt/format.h>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>

namespace fs = std::filesystem;

namespace bgaug {

std::string_view to_string(DatasetId d) noexcept {
    return d == DatasetId::Cdnet2014 ? "cdnet2014" : "lasiesta";
}

bool within_cdnet_resolution(const VideoDescriptor& d) noexcept {
    return d.width >= 320 && d.width <= 720 && d.height >= 240 && d.height <= 526;
}

namespace {

struct Fnv {
    std::uint64_t h = 0xcbf29ce484222325ull;
    void bytes(const void* p, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 0x100000001b3ull;
        }
    }
    void str(const std::string& s) {
        u64(s.size());
        bytes(s.data(), s.size());
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            const auto b = static_cast<unsigned char>(v >> (8 * i));
            bytes(&b, 1);
        }
    }
};

void require_dir(const fs::path& p) {
    if (!fs::is_directory(p)) throw Error(ErrorCode::MissingDirectory, "missing directory " + p.string());
}

// Files in dir whose name matches re; group 1 is the 1-based frame number.
// Numbers must run 1..N without gaps.
std::vector<fs::path> numbered_files(const fs::path& dir, const std::regex& re) {
    std::map<std::size_t, fs::path> found;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        std::smatch m;
        if (!std::regex_match(name, m, re)) continue;
        const auto n = static_cast<std::size_t>(std::stoull(m[1].str()));
        if (!found.emplace(n, entry.path()).second)
            throw Error(ErrorCode::InconsistentFrameCount, fmt::format("frame {} appears twice in {}", n, dir.string()));
    }
    std::vector<fs::path> out;
    out.reserve(found.size());
    std::size_t expect = 1;
    for (auto& [n, p] : found) {
        if (n != expect)
            throw Error(ErrorCode::InconsistentFrameCount,
                        fmt::format("{}: frame {} missing (next present is {})", dir.string(), expect, n));
        out.push_back(std::move(p));
        ++expect;
    }
    return out;
}

cv::Mat imread_checked(const fs::path& path, int flags) {
    if (!fs::exists(path)) throw Error(ErrorCode::MissingFile, "missing file " + path.string());
    cv::Mat m = cv::imread(path.string(), flags);
    if (m.empty()) throw Error(ErrorCode::CorruptImage, "cannot decode " + path.string());
    if (m.depth() != CV_8U) throw Error(ErrorCode::CorruptImage, "not an 8-bit image: " + path.string());
    return m;
}

TemporalRoi read_temporal_roi(const fs::path& path, std::size_t frames) {
    if (!fs::exists(path)) return {1, frames};
    std::ifstream in(path);
    long long first = 0, last = 0;
    if (!(in >> first >> last)) throw Error(ErrorCode::Io, "unparsable temporal ROI in " + path.string());
    if (first < 1 || last < first || static_cast<std::size_t>(last) > frames)
        throw Error(ErrorCode::InconsistentFrameCount,
                    fmt::format("temporal ROI {}..{} outside 1..{} ({})", first, last, frames, path.string()));
    return {static_cast<std::size_t>(first), static_cast<std::size_t>(last)};
}

void fill_dims(VideoDescriptor& d) {
    if (d.frame_paths.empty()) throw Error(ErrorCode::InconsistentFrameCount, "no frames in " + d.directory.string());
    if (d.groundtruth_paths.size() != d.frame_paths.size())
        throw Error(ErrorCode::InconsistentFrameCount,
                    fmt::format("{}: {} frames but {} ground-truth images", d.directory.string(), d.frame_paths.size(),
                                d.groundtruth_paths.size()));
    const cv::Mat first = imread_checked(d.frame_paths.front(), cv::IMREAD_UNCHANGED);
    d.frame_count = d.frame_paths.size();
    d.height = static_cast<std::size_t>(first.rows);
    d.width = static_cast<std::size_t>(first.cols);
}

} // namespace

std::uint64_t descriptor_hash(const VideoDescriptor& d) {
    Fnv f;
    f.u64(static_cast<std::uint64_t>(d.dataset));
    f.str(d.category);
    f.str(d.name);
    f.u64(d.frame_count);
    f.u64(d.height);
    f.u64(d.width);
    f.u64(d.temporal_roi.first);
    f.u64(d.temporal_roi.last);
    if (const auto* m = std::get_if<ManualFrame>(&d.empty_background)) {
        f.u64(0);
        f.u64(m->frame_id);
    } else {
        f.u64(1);
    }
    f.str(d.directory.generic_string());
    for (const auto& p : d.frame_paths) f.str(p.generic_string());
    for (const auto& p : d.groundtruth_paths) f.str(p.generic_string());
    f.str(d.roi_path ? d.roi_path->generic_string() : std::string());
    return f.h;
}

MultiChannelImage read_color_image(const fs::path& path) {
    cv::Mat bgr = imread_checked(path, cv::IMREAD_COLOR);
    const auto h = static_cast<std::size_t>(bgr.rows);
    const auto w = static_cast<std::size_t>(bgr.cols);
    MultiChannelImage img(h, w, 3);
    for (std::size_t r = 0; r < h; ++r) {
        const auto* src = bgr.ptr<std::uint8_t>(static_cast<int>(r));
        auto dst = img.row(r);
        for (std::size_t c = 0; c < w; ++c) {
            dst[3 * c + 0] = from_u8(src[3 * c + 2]);
            dst[3 * c + 1] = from_u8(src[3 * c + 1]);
            dst[3 * c + 2] = from_u8(src[3 * c + 0]);
        }
    }
    return img;
}

std::vector<std::uint8_t> read_gray_image(const fs::path& path, std::size_t& height, std::size_t& width) {
    cv::Mat g = imread_checked(path, cv::IMREAD_GRAYSCALE);
    height = static_cast<std::size_t>(g.rows);
    width = static_cast<std::size_t>(g.cols);
    std::vector<std::uint8_t> out(height * width);
    for (std::size_t r = 0; r < height; ++r) {
        const auto* src = g.ptr<std::uint8_t>(static_cast<int>(r));
        std::copy(src, src + width, out.begin() + static_cast<std::ptrdiff_t>(r * width));
    }
    return out;
}

void write_image(const fs::path& path, const MultiChannelImage& img) {
    const int h = static_cast<int>(img.height());
    const int w = static_cast<int>(img.width());
    const std::size_t ch = img.channels();
    if (ch == 0) throw Error(ErrorCode::InvalidArgument, "image has no channels");
    const bool color = ch >= 3;
    cv::Mat out(h, w, color ? CV_8UC3 : CV_8UC1);
    auto q = [](float v) { return static_cast<std::uint8_t>(std::lrint(std::clamp(v, 0.0f, 1.0f) * 255.0f)); };
    for (int r = 0; r < h; ++r) {
        auto* dst = out.ptr<std::uint8_t>(r);
        const auto src = img.row(static_cast<std::size_t>(r));
        for (int c = 0; c < w; ++c) {
            const std::size_t base = static_cast<std::size_t>(c) * ch;
            if (color) {
                dst[3 * c + 0] = q(src[base + 2]);
                dst[3 * c + 1] = q(src[base + 1]);
                dst[3 * c + 2] = q(src[base + 0]);
            } else {
                dst[c] = q(src[base]);
            }
        }
    }
    if (!cv::imwrite(path.string(), out)) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

void write_mask(const fs::path& path, const ForegroundMask& mask) {
    cv::Mat out(static_cast<int>(mask.height()), static_cast<int>(mask.width()), CV_8UC1);
    const auto data = mask.data();
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] ? 255 : 0;
    if (!cv::imwrite(path.string(), out)) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

VideoSource::VideoSource(VideoDescriptor descriptor, LabelTable table)
    : desc_(std::move(descriptor)), table_(table) {}

MultiChannelImage VideoSource::frame(std::size_t index) const {
    if (index >= desc_.frame_count)
        throw Error(ErrorCode::FrameIdOutOfRange, fmt::format("frame {} of {}", index, desc_.frame_count));
    MultiChannelImage img = read_color_image(desc_.frame_paths[index]);
    if (img.height() != desc_.height || img.width() != desc_.width)
        throw Error(ErrorCode::CorruptImage, "frame size differs from the video: " + desc_.frame_paths[index].string());
    return img;
}

GroundTruthMask VideoSource::groundtruth(std::size_t index) const {
    if (index >= desc_.frame_count)
        throw Error(ErrorCode::FrameIdOutOfRange, fmt::format("ground truth {} of {}", index, desc_.frame_count));
    std::size_t h = 0, w = 0;
    const auto gray = read_gray_image(desc_.groundtruth_paths[index], h, w);
    if (h != desc_.height || w != desc_.width)
        throw Error(ErrorCode::CorruptImage,
                    "ground truth size differs from the video: " + desc_.groundtruth_paths[index].string());
    return decode_labels(h, w, gray, table_);
}

ForegroundMask VideoSource::roi() const {
    if (!desc_.roi_path) return ForegroundMask(desc_.height, desc_.width, 1);
    std::size_t h = 0, w = 0;
    auto gray = read_gray_image(*desc_.roi_path, h, w);
    if (h != desc_.height || w != desc_.width)
        throw Error(ErrorCode::CorruptImage, "ROI size differs from the video: " + desc_.roi_path->string());
    for (auto& v : gray) v = v != 0;
    return ForegroundMask(h, w, std::move(gray));
}

VideoSource load_cdnet_video(const fs::path& root, const std::string& category, const std::string& video,
                             const LabelTable& table, std::size_t manual_frame) {
    VideoDescriptor d;
    d.dataset = DatasetId::Cdnet2014;
    d.category = category;
    d.name = video;
    d.directory = root / category / video;
    require_dir(d.directory);
    require_dir(d.directory / "input");
    require_dir(d.directory / "groundtruth");

    static const std::regex input_re(R"(in(\d{6})\.(jpg|jpeg|png|bmp))", std::regex::icase);
    static const std::regex gt_re(R"(gt(\d{6})\.(png|bmp))", std::regex::icase);
    d.frame_paths = numbered_files(d.directory / "input", input_re);
    d.groundtruth_paths = numbered_files(d.directory / "groundtruth", gt_re);
    fill_dims(d);

    for (const char* name : {"ROI.bmp", "ROI.png", "ROI.jpg"})
        if (fs::exists(d.directory / name)) {
            d.roi_path = d.directory / name;
            break;
        }
    d.temporal_roi = read_temporal_roi(d.directory / "temporalROI.txt", d.frame_count);
    if (manual_frame >= d.frame_count)
        throw Error(ErrorCode::FrameIdOutOfRange,
                    fmt::format("manual empty frame {} but the video has {} frames", manual_frame, d.frame_count));
    d.empty_background = ManualFrame{manual_frame};
    return VideoSource(std::move(d), table);
}

VideoSource load_lasiesta_video(const fs::path& root, const std::string& category, const std::string& video,
                                const LabelTable& table) {
    VideoDescriptor d;
    d.dataset = DatasetId::Lasiesta;
    d.category = category;
    d.name = video;
    d.directory = root / category / video;
    const fs::path gt_dir = root / category / (video + "-GT");
    require_dir(d.directory);
    require_dir(gt_dir);

    // Video names are alphanumeric with underscores in practice; escape anyway.
    static const std::regex special(R"([.^$|()\[\]{}*+?\\])");
    const std::string escaped = std::regex_replace(video, special, R"(\$&)");
    d.frame_paths = numbered_files(d.directory, std::regex(escaped + R"(-(\d+)\.(bmp|png|jpg))", std::regex::icase));
    d.groundtruth_paths = numbered_files(gt_dir, std::regex(escaped + R"(-GT_(\d+)\.(png|bmp))", std::regex::icase));
    fill_dims(d);
    d.temporal_roi = {1, d.frame_count};
    d.empty_background = GlobalMedian{};
    return VideoSource(std::move(d), table);
}

} // namespace bgaug
