#include "bgaug/photometric.hpp"

#include "bgaug/error.hpp"
#include "bgaug/rng.hpp"
#include "bgaug/simd/kernels.hpp"

#include <vector>

namespace bgaug {
namespace {

void shift_image(MultiChannelImage& img, const std::array<double, 3>& d) {
    float pattern[simd::kPatternPeriod];
    const std::size_t c = img.channels();
    for (std::size_t i = 0; i < simd::kPatternPeriod; ++i) {
        const std::size_t ch = i % c;
        pattern[i] = ch < 3 ? static_cast<float>(d[ch]) : 0.0f;
    }
    simd::active().add_periodic_clamp(img.data().data(), pattern, img.size());
}

void noise_image(MultiChannelImage& img, double sigma, RandomStream stream) {
    const std::size_t c = img.channels();
    std::vector<float> delta(img.size());
    for (std::size_t i = 0; i < delta.size(); ++i)
        delta[i] = (i % c) < 3 ? static_cast<float>(sigma * stream.normal()) : 0.0f;
    simd::active().add_clamp(img.data().data(), delta.data(), img.size());
}

bool same_shape(const MultiChannelImage& a, const MultiChannelImage& b) {
    return a.height() == b.height() && a.width() == b.width() && a.channels() == b.channels();
}

} // namespace

SampleTriplet illumination_shift(const SampleTriplet& t, const IlluminationParams& ip) {
    SampleTriplet out = t;
    shift_image(out.empty, ip.d_empty);
    shift_image(out.recent, ip.d_recent);
    shift_image(out.current, ip.d_current);
    return out;
}

SampleTriplet add_gaussian_noise(const SampleTriplet& t, const NoiseParams& np, std::uint64_t seed) {
    if (!(np.sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "noise sigma must be >= 0");
    SampleTriplet out = t;
    if (np.sigma == 0.0) return out;
    const RandomStream root(seed, 0x4E4F4953 /* "NOIS" */);
    noise_image(out.empty, np.sigma, root.split(0));
    noise_image(out.recent, np.sigma, root.split(1));
    noise_image(out.current, np.sigma, root.split(2));
    return out;
}

SampleTriplet intermittent_object_add(const SampleTriplet& base, const SampleTriplet& iom) {
    if (!same_shape(base.current, iom.current) || !same_shape(base.recent, iom.recent) ||
        !same_shape(base.empty, iom.empty) || !same_shape(base.current, base.recent) ||
        base.label.height() != iom.label.height() || base.label.width() != iom.label.width() ||
        base.label.height() != base.current.height() || base.label.width() != base.current.width())
        throw Error(ErrorCode::DimensionMismatch, "intermittent object donor shape differs from base");

    const std::size_t c = base.current.channels();
    const auto m = iom.label.data();
    std::vector<float> mask(base.current.size());
    for (std::size_t p = 0; p < m.size(); ++p)
        for (std::size_t ch = 0; ch < c; ++ch) mask[p * c + ch] = static_cast<float>(m[p]);

    const auto& k = simd::active();
    SampleTriplet out;
    out.empty = base.empty;
    out.current = MultiChannelImage(base.current.height(), base.current.width(), c);
    out.recent = MultiChannelImage(base.recent.height(), base.recent.width(), c);
    k.blend(out.current.data().data(), mask.data(), iom.current.data().data(), base.current.data().data(),
            mask.size());
    k.blend(out.recent.data().data(), mask.data(), iom.recent.data().data(), base.recent.data().data(),
            mask.size());

    out.label = ForegroundMask(base.label.height(), base.label.width());
    const auto f = base.label.data();
    auto dst = out.label.data();
    for (std::size_t p = 0; p < m.size(); ++p) dst[p] = static_cast<std::uint8_t>(m[p] + (1 - m[p]) * f[p]);
    return out;
}

} // namespace bgaug
