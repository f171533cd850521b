#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bgaug {

/// H x W x C float image, row-major with channels last, values in [0,1].
/// Channel 3 (0-based) is the foreground probability map when C == 4.
class MultiChannelImage {
public:
    MultiChannelImage() = default;
    MultiChannelImage(std::size_t height, std::size_t width, std::size_t channels, float fill = 0.0f);
    MultiChannelImage(std::size_t height, std::size_t width, std::size_t channels, std::vector<float> data);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t channels() const noexcept { return channels_; }
    std::size_t size() const noexcept { return data_.size(); }
    std::size_t row_stride() const noexcept { return width_ * channels_; }
    bool has_fpm() const noexcept { return channels_ == 4; }

    float& at(std::size_t row, std::size_t col, std::size_t ch) noexcept {
        return data_[(row * width_ + col) * channels_ + ch];
    }
    float at(std::size_t row, std::size_t col, std::size_t ch) const noexcept {
        return data_[(row * width_ + col) * channels_ + ch];
    }

    std::span<float> data() noexcept { return data_; }
    std::span<const float> data() const noexcept { return data_; }
    std::span<const float> row(std::size_t r) const noexcept {
        return std::span<const float>(data_).subspan(r * row_stride(), row_stride());
    }
    std::span<float> row(std::size_t r) noexcept {
        return std::span<float>(data_).subspan(r * row_stride(), row_stride());
    }

    friend bool operator==(const MultiChannelImage&, const MultiChannelImage&) = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::size_t channels_ = 0;
    std::vector<float> data_;
};

/// Binary H x W label field (0 background, 1 foreground).
class ForegroundMask {
public:
    ForegroundMask() = default;
    ForegroundMask(std::size_t height, std::size_t width, std::uint8_t fill = 0);
    ForegroundMask(std::size_t height, std::size_t width, std::vector<std::uint8_t> data);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return data_.size(); }

    std::uint8_t& at(std::size_t row, std::size_t col) noexcept { return data_[row * width_ + col]; }
    std::uint8_t at(std::size_t row, std::size_t col) const noexcept { return data_[row * width_ + col]; }

    std::span<std::uint8_t> data() noexcept { return data_; }
    std::span<const std::uint8_t> data() const noexcept { return data_; }

    friend bool operator==(const ForegroundMask&, const ForegroundMask&) = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Empty background, recent background, current frame and the current frame's label.
struct SampleTriplet {
    MultiChannelImage empty;
    MultiChannelImage recent;
    MultiChannelImage current;
    ForegroundMask label;

    std::size_t height() const noexcept { return current.height(); }
    std::size_t width() const noexcept { return current.width(); }
    std::size_t channels() const noexcept { return current.channels(); }

    friend bool operator==(const SampleTriplet&, const SampleTriplet&) = default;
};

/// Crop window by real-valued center and extent. The covered index range is
/// ceil(center - extent/2) .. ceil(center + extent/2) - 1 on each axis.
struct CropSpec {
    double center_row = 0.0;
    double center_col = 0.0;
    double height = 0.0;
    double width = 0.0;
};

/// Integer window resolved from a CropSpec.
struct PixelWindow {
    long row0 = 0;
    long row1 = 0; // exclusive
    long col0 = 0;
    long col1 = 0; // exclusive

    long rows() const noexcept { return row1 - row0; }
    long cols() const noexcept { return col1 - col0; }
};

PixelWindow resolve_window(const CropSpec& spec) noexcept;
bool window_fits(const PixelWindow& w, std::size_t height, std::size_t width) noexcept;

/// Convenience spec for an integer window with top-left (row0, col0).
CropSpec window_spec(long row0, long col0, long height, long width) noexcept;

/// Returns one human-readable entry per violated invariant; empty when valid.
/// Total on every input: never throws for malformed or non-finite data.
std::vector<std::string> validate_image(const MultiChannelImage& img, std::string_view name);
std::vector<std::string> validate_triplet(const SampleTriplet& t);

/// 8-bit source value to the normalized representation (v / 255).
inline float from_u8(std::uint8_t v) noexcept { return static_cast<float>(v) / 255.0f; }

} // namespace bgaug
