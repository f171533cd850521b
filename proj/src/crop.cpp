#include "bgaug/crop.hpp"

#include "bgaug/error.hpp"
#include "bgaug/simd/kernels.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstring>

namespace bgaug {
namespace {

PixelWindow checked_window(const CropSpec& spec, std::size_t height, std::size_t width) {
    const PixelWindow w = resolve_window(spec);
    if (!window_fits(w, height, width))
        throw Error(ErrorCode::OutOfBounds,
                    fmt::format("crop rows [{}, {}) cols [{}, {}) outside {}x{} image", w.row0, w.row1, w.col0,
                                w.col1, height, width));
    return w;
}

void check_triplet_dims(const SampleTriplet& t) {
    const auto h = t.current.height();
    const auto w = t.current.width();
    const auto c = t.current.channels();
    for (const auto* img : {&t.empty, &t.recent})
        if (img->height() != h || img->width() != w || img->channels() != c)
            throw Error(ErrorCode::DimensionMismatch, "triplet images differ in shape");
    if (t.label.height() != h || t.label.width() != w)
        throw Error(ErrorCode::DimensionMismatch, "triplet label differs in shape");
}

// Copies the window into out (window rows x cols x channels, contiguous).
void copy_window(const MultiChannelImage& src, const PixelWindow& w, float* out) {
    const std::size_t c = src.channels();
    const std::size_t row_len = static_cast<std::size_t>(w.cols()) * c;
    for (long r = w.row0; r < w.row1; ++r) {
        const float* from = src.row(static_cast<std::size_t>(r)).data() + static_cast<std::size_t>(w.col0) * c;
        std::memcpy(out, from, row_len * sizeof(float));
        out += row_len;
    }
}

struct Taps {
    std::size_t lo;
    std::size_t hi;
    float weight;
};

Taps taps(std::size_t out_index, std::size_t out_len, std::size_t in_len) {
    if (out_len == 1 || in_len == 1) return {0, 0, 0.0f};
    const double pos = static_cast<double>(out_index) * static_cast<double>(in_len - 1) /
                       static_cast<double>(out_len - 1);
    const auto lo = std::min(static_cast<std::size_t>(pos), in_len - 1);
    const auto hi = std::min(lo + 1, in_len - 1);
    return {lo, hi, static_cast<float>(pos - static_cast<double>(lo))};
}

// Bilinear resize of a window of src into out (out_h x out_w x channels).
// Vertical pass first (vectorized over the whole window row), then horizontal.
void resize_window(const MultiChannelImage& src, const PixelWindow& w, std::size_t out_h, std::size_t out_w,
                   float* out) {
    const std::size_t c = src.channels();
    const auto in_h = static_cast<std::size_t>(w.rows());
    const auto in_w = static_cast<std::size_t>(w.cols());
    if (in_h == out_h && in_w == out_w) {
        copy_window(src, w, out);
        return;
    }
    const auto& k = simd::active();
    std::vector<Taps> col_taps(out_w);
    for (std::size_t x = 0; x < out_w; ++x) col_taps[x] = taps(x, out_w, in_w);

    std::vector<float> vrow(in_w * c);
    const std::size_t col_off = static_cast<std::size_t>(w.col0) * c;
    for (std::size_t y = 0; y < out_h; ++y) {
        const Taps ty = taps(y, out_h, in_h);
        const float* top = src.row(static_cast<std::size_t>(w.row0) + ty.lo).data() + col_off;
        const float* bot = src.row(static_cast<std::size_t>(w.row0) + ty.hi).data() + col_off;
        k.lerp(vrow.data(), top, bot, ty.weight, vrow.size());

        float* dst = out + y * out_w * c;
        for (std::size_t x = 0; x < out_w; ++x) {
            const Taps tx = col_taps[x];
            const float wa = 1.0f - tx.weight;
            const float* a = vrow.data() + tx.lo * c;
            const float* b = vrow.data() + tx.hi * c;
            for (std::size_t ch = 0; ch < c; ++ch) dst[x * c + ch] = a[ch] * wa + b[ch] * tx.weight;
        }
    }
}

// Mean over a list of windows, each resized to out_h x out_w.
MultiChannelImage average_windows(const MultiChannelImage& src, const std::vector<PixelWindow>& windows,
                                  std::size_t out_h, std::size_t out_w) {
    const auto& k = simd::active();
    const std::size_t n = out_h * out_w * src.channels();
    std::vector<double> acc(n, 0.0);
    std::vector<float> term(n);
    for (const auto& w : windows) {
        resize_window(src, w, out_h, out_w, term.data());
        k.accumulate(acc.data(), term.data(), n);
    }
    MultiChannelImage out(out_h, out_w, src.channels());
    k.divide(out.data().data(), acc.data(), static_cast<double>(windows.size()), n);
    return out;
}

CropSpec scaled(const CropSpec& s, double factor) {
    return {s.center_row, s.center_col, s.height * factor, s.width * factor};
}

CropSpec shifted(const CropSpec& s, double drow, double dcol) {
    return {s.center_row + drow, s.center_col + dcol, s.height, s.width};
}

} // namespace

MultiChannelImage crop(const MultiChannelImage& img, const CropSpec& spec) {
    const PixelWindow w = checked_window(spec, img.height(), img.width());
    MultiChannelImage out(static_cast<std::size_t>(w.rows()), static_cast<std::size_t>(w.cols()), img.channels());
    copy_window(img, w, out.data().data());
    return out;
}

ForegroundMask crop(const ForegroundMask& mask, const CropSpec& spec) {
    const PixelWindow w = checked_window(spec, mask.height(), mask.width());
    ForegroundMask out(static_cast<std::size_t>(w.rows()), static_cast<std::size_t>(w.cols()));
    auto* dst = out.data().data();
    for (long r = w.row0; r < w.row1; ++r) {
        const auto* from = mask.data().data() + static_cast<std::size_t>(r) * mask.width() + w.col0;
        std::memcpy(dst, from, static_cast<std::size_t>(w.cols()));
        dst += w.cols();
    }
    return out;
}

MultiChannelImage resize_bilinear(const MultiChannelImage& img, std::size_t out_height, std::size_t out_width) {
    if (out_height == 0 || out_width == 0)
        throw Error(ErrorCode::InvalidArgument, "resize target must be at least 1x1");
    if (img.height() == 0 || img.width() == 0) throw Error(ErrorCode::InvalidArgument, "resize of empty image");
    MultiChannelImage out(out_height, out_width, img.channels());
    const PixelWindow whole{0, static_cast<long>(img.height()), 0, static_cast<long>(img.width())};
    resize_window(img, whole, out_height, out_width, out.data().data());
    return out;
}

SampleTriplet spatially_aligned_crop(const SampleTriplet& t, const CropSpec& spec) {
    check_triplet_dims(t);
    return {crop(t.empty, spec), crop(t.recent, spec), crop(t.current, spec), crop(t.label, spec)};
}

SampleTriplet randomly_shifted_crop(const SampleTriplet& t, const CropSpec& spec_empty,
                                    const CropSpec& spec_recent, const CropSpec& spec_current) {
    check_triplet_dims(t);
    const PixelWindow we = resolve_window(spec_empty);
    const PixelWindow wr = resolve_window(spec_recent);
    const PixelWindow wc = resolve_window(spec_current);
    if (we.rows() != wc.rows() || we.cols() != wc.cols() || wr.rows() != wc.rows() || wr.cols() != wc.cols())
        throw Error(ErrorCode::InvalidArgument, "shifted crop windows must share one extent");
    return {crop(t.empty, spec_empty), crop(t.recent, spec_recent), crop(t.current, spec_current),
            crop(t.label, spec_current)};
}

SampleTriplet ptz_zoom_crop(const SampleTriplet& t, const CropSpec& spec, const ZoomParams& zoom) {
    check_triplet_dims(t);
    if (zoom.steps < 1) throw Error(ErrorCode::InvalidArgument, "zoom steps must be >= 1");
    const PixelWindow base = checked_window(spec, t.height(), t.width());
    const auto out_h = static_cast<std::size_t>(base.rows());
    const auto out_w = static_cast<std::size_t>(base.cols());

    auto windows_for = [&](double z) {
        std::vector<PixelWindow> ws;
        ws.reserve(static_cast<std::size_t>(zoom.steps));
        for (int n = 0; n < zoom.steps; ++n) {
            const double factor = 1.0 + n * z;
            if (!(factor > 0.0)) throw Error(ErrorCode::InvalidArgument, "zoom step collapses the window");
            ws.push_back(checked_window(scaled(spec, factor), t.height(), t.width()));
        }
        return ws;
    };
    const auto we = windows_for(zoom.z_empty);
    const auto wr = windows_for(zoom.z_recent);

    SampleTriplet out;
    out.empty = average_windows(t.empty, we, out_h, out_w);
    out.recent = average_windows(t.recent, wr, out_h, out_w);
    out.current = crop(t.current, spec);
    out.label = crop(t.label, spec);
    return out;
}

SampleTriplet ptz_pan_crop(const SampleTriplet& t, const CropSpec& spec, const PanParams& pan) {
    check_triplet_dims(t);
    if (pan.steps_empty < 1 || pan.steps_recent < 1)
        throw Error(ErrorCode::InvalidArgument, "pan steps must be >= 1");
    const PixelWindow base = checked_window(spec, t.height(), t.width());
    const auto out_h = static_cast<std::size_t>(base.rows());
    const auto out_w = static_cast<std::size_t>(base.cols());

    const int max_steps = std::max(pan.steps_empty, pan.steps_recent);
    std::vector<PixelWindow> ws;
    ws.reserve(static_cast<std::size_t>(max_steps));
    for (int n = 0; n < max_steps; ++n)
        ws.push_back(checked_window(shifted(spec, n * pan.shift_row, n * pan.shift_col), t.height(), t.width()));

    SampleTriplet out;
    out.empty = average_windows(t.empty, {ws.begin(), ws.begin() + pan.steps_empty}, out_h, out_w);
    out.recent = average_windows(t.recent, {ws.begin(), ws.begin() + pan.steps_recent}, out_h, out_w);
    out.current = crop(t.current, spec);
    out.label = crop(t.label, spec);
    return out;
}

} // namespace bgaug
