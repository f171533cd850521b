#include "bgaug/synthetic.hpp"

#include "bgaug/error.hpp"

#include <algorithm>

namespace bgaug {

SampleTriplet synthetic_triplet(std::size_t height, std::size_t width, std::size_t channels, std::uint64_t variant) {
    if (height == 0 || width == 0 || (channels != 3 && channels != 4))
        throw Error(ErrorCode::InvalidArgument, "synthetic triplet needs a nonzero size and 3 or 4 channels");

    const std::size_t side = std::max<std::size_t>(1, std::min(height, width) / 4);
    const std::size_t r0 = (variant * 7 + height / 3) % (height - side + 1);
    const std::size_t c0 = (variant * 13 + width / 3) % (width - side + 1);
    static constexpr float kObject[3] = {0.9f, 0.2f, 0.1f};

    SampleTriplet t{MultiChannelImage(height, width, channels), MultiChannelImage(height, width, channels),
                    MultiChannelImage(height, width, channels), ForegroundMask(height, width)};
    for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c) {
            const float fr = static_cast<float>(r) / static_cast<float>(height);
            const float fc = static_cast<float>(c) / static_cast<float>(width);
            const float bg[3] = {0.1f + 0.8f * fc, 0.1f + 0.8f * fr, 0.5f - 0.3f * fc + 0.2f * fr};
            const bool inside = r >= r0 && r < r0 + side && c >= c0 && c < c0 + side;
            t.label.at(r, c) = inside;
            for (std::size_t k = 0; k < 3; ++k) {
                t.empty.at(r, c, k) = bg[k];
                t.recent.at(r, c, k) = std::min(1.0f, bg[k] + 0.02f);
                t.current.at(r, c, k) = inside ? kObject[k] : bg[k];
            }
            if (channels == 4) t.current.at(r, c, 3) = inside ? 1.0f : 0.0f;
        }
    return t;
}

} // namespace bgaug
