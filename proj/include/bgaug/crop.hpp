#pragma once

#include "bgaug/image.hpp"

namespace bgaug {

/// Per-step zoom factors for the empty and recent slots. Window n covers
/// extent * (1 + n * z); positive z zooms in, negative zooms out.
struct ZoomParams {
    double z_empty = 0.0;
    double z_recent = 0.0;
    int steps = 1;
};

/// Per-step pan shift (rows, cols) and step counts for the empty and recent slots.
struct PanParams {
    double shift_row = 0.0;
    double shift_col = 0.0;
    int steps_empty = 1;
    int steps_recent = 1;
};

/// Throws OutOfBounds when the resolved window leaves the image.
MultiChannelImage crop(const MultiChannelImage& img, const CropSpec& spec);
ForegroundMask crop(const ForegroundMask& mask, const CropSpec& spec);

/// Corner-aligned bilinear interpolation with edge clamping: output sample y
/// reads source coordinate y * (in_h - 1) / (out_h - 1) (0 when out_h == 1),
/// likewise for columns. Same-size resize returns a bit-identical copy.
MultiChannelImage resize_bilinear(const MultiChannelImage& img, std::size_t out_height, std::size_t out_width);

/// Same window for all four members.
SampleTriplet spatially_aligned_crop(const SampleTriplet& t, const CropSpec& spec);

/// Empty at spec_empty, recent at spec_recent, current and label at spec_current.
/// All three specs must resolve to the same extent.
SampleTriplet randomly_shifted_crop(const SampleTriplet& t, const CropSpec& spec_empty,
                                    const CropSpec& spec_recent, const CropSpec& spec_current);

/// Current/label: plain crop. Empty/recent: mean over n of the n-th scaled
/// window resized back to the plain extent.
SampleTriplet ptz_zoom_crop(const SampleTriplet& t, const CropSpec& spec, const ZoomParams& zoom);

/// Current/label: plain crop. Empty/recent: mean over n of the window shifted
/// by n * (shift_row, shift_col).
SampleTriplet ptz_pan_crop(const SampleTriplet& t, const CropSpec& spec, const PanParams& pan);

} // namespace bgaug
