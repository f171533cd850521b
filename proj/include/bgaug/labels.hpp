#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bgaug {

/// Five-way evaluation label. Codes are part of the kernel contract
/// (values above HardShadow are ignored by the confusion tally).
enum class GtLabel : std::uint8_t {
    Background = 0,
    Foreground = 1,
    HardShadow = 2,
    UnknownMotion = 3,
    OutOfRoi = 4,
};

class GroundTruthMask {
public:
    GroundTruthMask() = default;
    GroundTruthMask(std::size_t height, std::size_t width, GtLabel fill = GtLabel::Background)
        : height_(height), width_(width), codes_(height * width, static_cast<std::uint8_t>(fill)) {}

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return codes_.size(); }

    GtLabel at(std::size_t r, std::size_t c) const noexcept { return static_cast<GtLabel>(codes_[r * width_ + c]); }
    void set(std::size_t r, std::size_t c, GtLabel v) noexcept { codes_[r * width_ + c] = static_cast<std::uint8_t>(v); }

    std::span<const std::uint8_t> codes() const noexcept { return codes_; }
    std::span<std::uint8_t> codes() noexcept { return codes_; }

    friend bool operator==(const GroundTruthMask&, const GroundTruthMask&) = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<std::uint8_t> codes_;
};

/// Gray level -> label. Levels without an entry are rejected on decode.
struct LabelTable {
    std::array<std::optional<GtLabel>, 256> levels{};

    /// Inverse mapping; throws UnknownLabel if the label has no level.
    std::uint8_t gray_for(GtLabel label) const;
};

/// 0 static, 50 hard shadow, 85 outside ROI, 170 unknown motion, 255 motion.
LabelTable cdnet_label_table();
/// Binary masks: 0 background, 255 foreground.
LabelTable binary_label_table();

/// Throws UnknownLabel on the first undocumented gray level.
GroundTruthMask decode_labels(std::size_t height, std::size_t width, std::span<const std::uint8_t> gray,
                              const LabelTable& table);

} // namespace bgaug
