#pragma once

#include "bgaug/image.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace bgaug {

inline constexpr std::size_t kRecentWindow = 100;
inline constexpr std::size_t kMoreRecentWindow = 30;

/// Per-pixel, per-channel lower median over the last min(window, n) frames.
/// Values are quantized to 8 bits (round(v * 255)) before ordering and mapped
/// back as q / 255, so the result is always an attained 8-bit level.
MultiChannelImage median_background(std::span<const MultiChannelImage> frames,
                                    std::size_t window_length = kRecentWindow);
MultiChannelImage median_background(std::span<const MultiChannelImage* const> frames,
                                    std::size_t window_length = kRecentWindow);

/// Sliding-window median kept as 8-bit ring buffer plus a 256-bucket count
/// histogram (with a 16-bucket coarse level) per pixel-channel. A push costs
/// O(1) per element to update and O(32) to locate the median, independent of
/// the window length. Memory is about (window + 272) bytes per pixel-channel.
class MedianWindow {
public:
    /// window_length in [1, 255].
    MedianWindow(std::size_t height, std::size_t width, std::size_t channels, std::size_t window_length);

    /// Inserts a frame (evicting the oldest when full) and returns the median
    /// of the current contents. Throws DimensionMismatch.
    const MultiChannelImage& push(const MultiChannelImage& frame);

    const MultiChannelImage& current() const noexcept { return median_; }
    std::size_t size() const noexcept { return count_; }
    std::size_t window_length() const noexcept { return window_; }

private:
    std::size_t height_, width_, channels_, window_;
    std::size_t elements_;
    std::size_t count_ = 0;
    std::size_t head_ = 0; // next slot to write
    std::vector<std::uint8_t> ring_;   // window_ x elements_
    std::vector<std::uint8_t> fine_;   // elements_ x 256
    std::vector<std::uint8_t> coarse_; // elements_ x 16
    std::vector<std::uint8_t> quantized_;
    std::vector<std::uint8_t> median_q_;
    MultiChannelImage median_;
};

/// Unbounded lower median over every frame pushed; for whole-video medians
/// where the frames are decoded one at a time. Up to 65535 frames.
class RunningMedian {
public:
    RunningMedian(std::size_t height, std::size_t width, std::size_t channels);

    void push(const MultiChannelImage& frame);
    std::size_t size() const noexcept { return count_; }
    /// Throws EmptySequence when nothing was pushed.
    MultiChannelImage result() const;

private:
    std::size_t height_, width_, channels_;
    std::size_t count_ = 0;
    std::vector<std::uint16_t> hist_;
    std::vector<std::uint8_t> quantized_;
};

struct ManualFrame {
    std::size_t frame_id = 0;
};
struct GlobalMedian {};
using EmptyBackgroundStrategy = std::variant<ManualFrame, GlobalMedian>;

/// Either the designated frame verbatim or the median over every frame.
MultiChannelImage empty_background(std::span<const MultiChannelImage> frames, const EmptyBackgroundStrategy& s);

} // namespace bgaug
