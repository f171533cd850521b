#include "bgaug/image.hpp"

#include "bgaug/error.hpp"

#include <cmath>
#include <fmt/format.h>

namespace bgaug {

MultiChannelImage::MultiChannelImage(std::size_t height, std::size_t width, std::size_t channels, float fill)
    : height_(height), width_(width), channels_(channels), data_(height * width * channels, fill) {}

MultiChannelImage::MultiChannelImage(std::size_t height, std::size_t width, std::size_t channels,
                                     std::vector<float> data)
    : height_(height), width_(width), channels_(channels), data_(std::move(data)) {
    if (data_.size() != height * width * channels)
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("image data length {} != {}x{}x{}", data_.size(), height, width, channels));
}

ForegroundMask::ForegroundMask(std::size_t height, std::size_t width, std::uint8_t fill)
    : height_(height), width_(width), data_(height * width, fill) {}

ForegroundMask::ForegroundMask(std::size_t height, std::size_t width, std::vector<std::uint8_t> data)
    : height_(height), width_(width), data_(std::move(data)) {
    if (data_.size() != height * width)
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("mask data length {} != {}x{}", data_.size(), height, width));
}

PixelWindow resolve_window(const CropSpec& s) noexcept {
    return {static_cast<long>(std::ceil(s.center_row - s.height / 2.0)),
            static_cast<long>(std::ceil(s.center_row + s.height / 2.0)),
            static_cast<long>(std::ceil(s.center_col - s.width / 2.0)),
            static_cast<long>(std::ceil(s.center_col + s.width / 2.0))};
}

bool window_fits(const PixelWindow& w, std::size_t height, std::size_t width) noexcept {
    return w.row0 >= 0 && w.col0 >= 0 && w.rows() > 0 && w.cols() > 0 &&
           w.row1 <= static_cast<long>(height) && w.col1 <= static_cast<long>(width);
}

CropSpec window_spec(long row0, long col0, long height, long width) noexcept {
    return {static_cast<double>(row0) + static_cast<double>(height) / 2.0,
            static_cast<double>(col0) + static_cast<double>(width) / 2.0, static_cast<double>(height),
            static_cast<double>(width)};
}

std::vector<std::string> validate_image(const MultiChannelImage& img, std::string_view name) {
    std::vector<std::string> out;
    if (img.channels() != 3 && img.channels() != 4)
        out.push_back(fmt::format("{} channels {} not in {{3, 4}}", name, img.channels()));
    if (img.size() != img.height() * img.width() * img.channels())
        out.push_back(fmt::format("{} data length != height x width x channels", name));
    for (float v : img.data()) {
        // !(v >= 0 && v <= 1) also catches NaN.
        if (!(v >= 0.0f && v <= 1.0f)) {
            out.push_back(fmt::format("{} value out of [0,1]", name));
            break;
        }
    }
    return out;
}

std::vector<std::string> validate_triplet(const SampleTriplet& t) {
    std::vector<std::string> out;
    const struct {
        const MultiChannelImage* img;
        const char* name;
    } members[] = {{&t.empty, "empty"}, {&t.recent, "recent"}, {&t.current, "current"}};

    for (const auto& m : members) {
        auto v = validate_image(*m.img, m.name);
        out.insert(out.end(), v.begin(), v.end());
    }
    for (const auto& m : {members[0], members[1]}) {
        if (m.img->height() != t.current.height())
            out.push_back(fmt::format("{} height != image height", m.name));
        if (m.img->width() != t.current.width())
            out.push_back(fmt::format("{} width != image width", m.name));
        if (m.img->channels() != t.current.channels())
            out.push_back(fmt::format("{} channels != current channels", m.name));
    }
    if (t.label.height() != t.current.height()) out.push_back("label height != image height");
    if (t.label.width() != t.current.width()) out.push_back("label width != image width");
    if (t.label.size() != t.label.height() * t.label.width()) out.push_back("label data length != height x width");
    for (auto v : t.label.data()) {
        if (v > 1) {
            out.push_back("label value not in {0,1}");
            break;
        }
    }
    return out;
}

} // namespace bgaug
