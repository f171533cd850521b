#pragma once

#include "bgaug/background.hpp"
#include "bgaug/image.hpp"
#include "bgaug/labels.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bgaug {

enum class DatasetId { Cdnet2014, Lasiesta };
std::string_view to_string(DatasetId d) noexcept;

/// 1-based inclusive frame range that is scored.
struct TemporalRoi {
    std::size_t first = 1;
    std::size_t last = 0;

    bool contains(std::size_t frame) const noexcept { return frame >= first && frame <= last; }
};

struct VideoDescriptor {
    DatasetId dataset = DatasetId::Cdnet2014;
    std::string category;
    std::string name;
    std::size_t frame_count = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    TemporalRoi temporal_roi;
    EmptyBackgroundStrategy empty_background = ManualFrame{0};

    std::filesystem::path directory;
    std::vector<std::filesystem::path> frame_paths;       // index order
    std::vector<std::filesystem::path> groundtruth_paths; // same length as frame_paths
    std::optional<std::filesystem::path> roi_path;
};

/// CDNet-2014 spans 320x240 up to 720x526.
bool within_cdnet_resolution(const VideoDescriptor& d) noexcept;

/// FNV-1a over every descriptor field, for reproducibility checks.
std::uint64_t descriptor_hash(const VideoDescriptor& d);

/// Decodes frames on demand. Immutable after construction, so distinct
/// frames may be decoded from different threads.
class VideoSource {
public:
    VideoSource(VideoDescriptor descriptor, LabelTable table);

    const VideoDescriptor& descriptor() const noexcept { return desc_; }
    std::size_t size() const noexcept { return desc_.frame_count; }

    /// 0-based index; RGB, 3 channels in [0,1]. Throws FrameIdOutOfRange or CorruptImage.
    MultiChannelImage frame(std::size_t index) const;
    GroundTruthMask groundtruth(std::size_t index) const;
    /// All ones when the video has no ROI image.
    ForegroundMask roi() const;
    /// Frames are 1-based in the dataset; index is 0-based.
    bool evaluated(std::size_t index) const noexcept { return desc_.temporal_roi.contains(index + 1); }

private:
    VideoDescriptor desc_;
    LabelTable table_;
};

/// root/category/video/{input/inNNNNNN.jpg, groundtruth/gtNNNNNN.png, ROI.bmp, temporalROI.txt}.
/// Empty background defaults to ManualFrame{manual_frame}.
VideoSource load_cdnet_video(const std::filesystem::path& root, const std::string& category,
                             const std::string& video, const LabelTable& table = cdnet_label_table(),
                             std::size_t manual_frame = 0);

/// root/category/video/video-N.bmp and root/category/video-GT/video-GT_N.png,
/// binary ground truth. Empty background defaults to GlobalMedian.
VideoSource load_lasiesta_video(const std::filesystem::path& root, const std::string& category,
                                const std::string& video, const LabelTable& table = binary_label_table());

/// Reads an 8-bit image as RGB float. Throws MissingFile or CorruptImage.
MultiChannelImage read_color_image(const std::filesystem::path& path);
/// Reads an 8-bit single-channel image. Throws MissingFile or CorruptImage.
std::vector<std::uint8_t> read_gray_image(const std::filesystem::path& path, std::size_t& height,
                                          std::size_t& width);
/// 8-bit PNG/BMP/JPEG by extension; channels 1 or 3 (RGB) use the first channels. Throws Io.
void write_image(const std::filesystem::path& path, const MultiChannelImage& img);
void write_mask(const std::filesystem::path& path, const ForegroundMask& mask); // 0 / 255

} // namespace bgaug
