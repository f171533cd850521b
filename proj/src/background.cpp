#include "bgaug/background.hpp"

#include "bgaug/error.hpp"
#include "bgaug/simd/kernels.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cstring>

namespace bgaug {
namespace {

void check_same_shape(const MultiChannelImage& a, const MultiChannelImage& b) {
    if (a.height() != b.height() || a.width() != b.width() || a.channels() != b.channels())
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("frame {}x{}x{} does not match {}x{}x{}", b.height(), b.width(), b.channels(),
                                a.height(), a.width(), a.channels()));
}

MultiChannelImage dequantize(std::size_t h, std::size_t w, std::size_t c, const std::vector<std::uint8_t>& q) {
    MultiChannelImage out(h, w, c);
    simd::active().u8_to_unit(out.data().data(), q.data(), q.size());
    return out;
}

} // namespace

MultiChannelImage median_background(std::span<const MultiChannelImage* const> frames, std::size_t window_length) {
    if (frames.empty()) throw Error(ErrorCode::EmptySequence, "median of zero frames");
    if (window_length == 0) throw Error(ErrorCode::InvalidArgument, "window length must be >= 1");
    const MultiChannelImage& ref = *frames.back();
    for (const auto* f : frames) check_same_shape(ref, *f);

    const std::size_t used = std::min(window_length, frames.size());
    const auto window = frames.subspan(frames.size() - used);
    const std::size_t n = ref.size();
    const auto& k = simd::active();

    // Counting sort per element over tiles of elements: histogram of 8-bit
    // levels, then walk to the lower-median rank (used - 1) / 2.
    constexpr std::size_t kTile = 4096;
    const std::size_t rank = (used - 1) / 2;
    std::vector<std::uint32_t> hist(kTile * 256);
    std::vector<std::uint8_t> q(kTile);
    std::vector<std::uint8_t> med(n);
    for (std::size_t base = 0; base < n; base += kTile) {
        const std::size_t len = std::min(kTile, n - base);
        std::fill(hist.begin(), hist.begin() + static_cast<std::ptrdiff_t>(len * 256), 0u);
        for (const auto* f : window) {
            k.unit_to_u8(q.data(), f->data().data() + base, len);
            for (std::size_t e = 0; e < len; ++e) ++hist[e * 256 + q[e]];
        }
        for (std::size_t e = 0; e < len; ++e) {
            const std::uint32_t* h = &hist[e * 256];
            std::size_t seen = 0;
            int level = 0;
            while (seen + h[level] <= rank) seen += h[level++];
            med[base + e] = static_cast<std::uint8_t>(level);
        }
    }
    return dequantize(ref.height(), ref.width(), ref.channels(), med);
}

MultiChannelImage median_background(std::span<const MultiChannelImage> frames, std::size_t window_length) {
    std::vector<const MultiChannelImage*> ptrs;
    ptrs.reserve(frames.size());
    for (const auto& f : frames) ptrs.push_back(&f);
    return median_background(std::span<const MultiChannelImage* const>(ptrs), window_length);
}

MedianWindow::MedianWindow(std::size_t height, std::size_t width, std::size_t channels, std::size_t window_length)
    : height_(height), width_(width), channels_(channels), window_(window_length),
      elements_(height * width * channels) {
    if (window_length < 1 || window_length > 255)
        throw Error(ErrorCode::InvalidArgument, "streaming median window must be in [1, 255]");
    ring_.assign(window_ * elements_, 0);
    fine_.assign(elements_ * 256, 0);
    coarse_.assign(elements_ * 16, 0);
    quantized_.assign(elements_, 0);
    median_q_.assign(elements_, 0);
    median_ = MultiChannelImage(height, width, channels);
}

const MultiChannelImage& MedianWindow::push(const MultiChannelImage& frame) {
    check_same_shape(median_, frame);
    const auto& k = simd::active();
    k.unit_to_u8(quantized_.data(), frame.data().data(), elements_);

    std::uint8_t* slot = &ring_[head_ * elements_];
    const bool evict = count_ == window_;
    for (std::size_t e = 0; e < elements_; ++e) {
        if (evict) {
            const std::uint8_t old = slot[e];
            --fine_[e * 256 + old];
            --coarse_[e * 16 + (old >> 4)];
        }
        const std::uint8_t v = quantized_[e];
        ++fine_[e * 256 + v];
        ++coarse_[e * 16 + (v >> 4)];
    }
    std::memcpy(slot, quantized_.data(), elements_);
    head_ = (head_ + 1) % window_;
    if (!evict) ++count_;

    const std::size_t rank = (count_ - 1) / 2;
    for (std::size_t e = 0; e < elements_; ++e) {
        const std::uint8_t* coarse = &coarse_[e * 16];
        std::size_t seen = 0;
        int bucket = 0;
        while (seen + coarse[bucket] <= rank) seen += coarse[bucket++];
        const std::uint8_t* fine = &fine_[e * 256 + bucket * 16];
        int level = 0;
        while (seen + fine[level] <= rank) seen += fine[level++];
        median_q_[e] = static_cast<std::uint8_t>(bucket * 16 + level);
    }
    k.u8_to_unit(median_.data().data(), median_q_.data(), elements_);
    return median_;
}

RunningMedian::RunningMedian(std::size_t height, std::size_t width, std::size_t channels)
    : height_(height), width_(width), channels_(channels), hist_(height * width * channels * 256, 0),
      quantized_(height * width * channels) {}

void RunningMedian::push(const MultiChannelImage& frame) {
    if (frame.height() != height_ || frame.width() != width_ || frame.channels() != channels_)
        throw Error(ErrorCode::DimensionMismatch, "frame shape differs from the running median");
    if (count_ == 65535) throw Error(ErrorCode::InvalidArgument, "running median holds at most 65535 frames");
    simd::active().unit_to_u8(quantized_.data(), frame.data().data(), quantized_.size());
    for (std::size_t e = 0; e < quantized_.size(); ++e) ++hist_[e * 256 + quantized_[e]];
    ++count_;
}

MultiChannelImage RunningMedian::result() const {
    if (count_ == 0) throw Error(ErrorCode::EmptySequence, "median of zero frames");
    const std::size_t rank = (count_ - 1) / 2;
    std::vector<std::uint8_t> med(quantized_.size());
    for (std::size_t e = 0; e < med.size(); ++e) {
        const std::uint16_t* h = &hist_[e * 256];
        std::size_t seen = 0;
        int level = 0;
        while (seen + h[level] <= rank) seen += h[level++];
        med[e] = static_cast<std::uint8_t>(level);
    }
    return dequantize(height_, width_, channels_, med);
}

MultiChannelImage empty_background(std::span<const MultiChannelImage> frames, const EmptyBackgroundStrategy& s) {
    if (const auto* manual = std::get_if<ManualFrame>(&s)) {
        if (manual->frame_id >= frames.size())
            throw Error(ErrorCode::FrameIdOutOfRange,
                        fmt::format("frame id {} outside {} frames", manual->frame_id, frames.size()));
        return frames[manual->frame_id];
    }
    if (frames.empty()) throw Error(ErrorCode::EmptySequence, "global median of zero frames");
    return median_background(frames, frames.size());
}

} // namespace bgaug
