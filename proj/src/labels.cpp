#include "bgaug/labels.hpp"

#include "bgaug/error.hpp"

#include <fmt/format.h>

namespace bgaug {

std::uint8_t LabelTable::gray_for(GtLabel label) const {
    for (std::size_t g = 0; g < levels.size(); ++g)
        if (levels[g] == label) return static_cast<std::uint8_t>(g);
    throw Error(ErrorCode::UnknownLabel,
                fmt::format("label {} has no gray level in this table", static_cast<int>(label)));
}

LabelTable cdnet_label_table() {
    LabelTable t;
    t.levels[0] = GtLabel::Background;
    t.levels[50] = GtLabel::HardShadow;
    t.levels[85] = GtLabel::OutOfRoi;
    t.levels[170] = GtLabel::UnknownMotion;
    t.levels[255] = GtLabel::Foreground;
    return t;
}

LabelTable binary_label_table() {
    LabelTable t;
    t.levels[0] = GtLabel::Background;
    t.levels[255] = GtLabel::Foreground;
    return t;
}

GroundTruthMask decode_labels(std::size_t height, std::size_t width, std::span<const std::uint8_t> gray,
                              const LabelTable& table) {
    if (gray.size() != height * width)
        throw Error(ErrorCode::DimensionMismatch, "ground-truth buffer does not match its dimensions");
    GroundTruthMask out(height, width);
    auto codes = out.codes();
    for (std::size_t i = 0; i < gray.size(); ++i) {
        const auto& label = table.levels[gray[i]];
        if (!label)
            throw Error(ErrorCode::UnknownLabel,
                        fmt::format("gray level {} at pixel ({}, {})", gray[i], i / width, i % width));
        codes[i] = static_cast<std::uint8_t>(*label);
    }
    return out;
}

} // namespace bgaug
