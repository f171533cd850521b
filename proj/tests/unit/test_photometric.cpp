#include "bgaug/error.hpp"
#include "bgaug/photometric.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace bgaug;
using bgaug::testing::random_image;
using bgaug::testing::random_mask;
using bgaug::testing::random_triplet;

TEST_SUITE("photometric") {

TEST_CASE("illumination adds a per-slot offset to RGB and clamps") {
    RandomStream r(1);
    const auto t = random_triplet(r, 9, 11, 4);
    const IlluminationParams ip{{0.3, -0.2, 0.05}, {-0.1, 0.4, 0.0}, {0.7, -0.7, 0.01}};
    const auto out = illumination_shift(t, ip);
    const std::pair<const MultiChannelImage*, const std::array<double, 3>*> slots[] = {
        {&t.empty, &ip.d_empty}, {&t.recent, &ip.d_recent}, {&t.current, &ip.d_current}};
    const MultiChannelImage* outs[] = {&out.empty, &out.recent, &out.current};
    for (int s = 0; s < 3; ++s) {
        const auto& in = *slots[s].first;
        const auto& d = *slots[s].second;
        for (std::size_t y = 0; y < 9; ++y)
            for (std::size_t x = 0; x < 11; ++x) {
                for (std::size_t k = 0; k < 3; ++k)
                    CHECK(outs[s]->at(y, x, k) ==
                          std::clamp(in.at(y, x, k) + static_cast<float>(d[k]), 0.0f, 1.0f));
                CHECK(outs[s]->at(y, x, 3) == in.at(y, x, 3));
            }
    }
    CHECK(out.label == t.label);
    CHECK(illumination_shift(t, {}) == t);
}

TEST_CASE("three-channel images are shifted on every channel") {
    RandomStream r(2);
    const auto t = random_triplet(r, 5, 7, 3);
    const auto out = illumination_shift(t, {{0.1, 0.2, 0.3}, {0.1, 0.2, 0.3}, {0.1, 0.2, 0.3}});
    for (std::size_t y = 0; y < 5; ++y)
        for (std::size_t x = 0; x < 7; ++x)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(out.current.at(y, x, k) == std::min(1.0f, t.current.at(y, x, k) + static_cast<float>(0.1 * (k + 1))));
}

TEST_CASE("gaussian noise") {
    RandomStream r(3);
    SampleTriplet t{MultiChannelImage(64, 64, 4, 0.5f), MultiChannelImage(64, 64, 4, 0.5f),
                    MultiChannelImage(64, 64, 4, 0.5f), random_mask(r, 64, 64)};
    const auto a = add_gaussian_noise(t, {0.01}, 77);
    const auto b = add_gaussian_noise(t, {0.01}, 77);
    const auto c = add_gaussian_noise(t, {0.01}, 78);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(add_gaussian_noise(t, {0.0}, 77) == t);
    CHECK_THROWS_AS(add_gaussian_noise(t, {-1.0}, 77), Error);

    double sum = 0, sq = 0;
    std::size_t n = 0;
    for (std::size_t y = 0; y < 64; ++y)
        for (std::size_t x = 0; x < 64; ++x) {
            for (std::size_t k = 0; k < 3; ++k) {
                const double d = a.current.at(y, x, k) - 0.5;
                sum += d;
                sq += d * d;
                ++n;
            }
            CHECK(a.current.at(y, x, 3) == 0.5f);
        }
    CHECK(std::abs(sum / n) < 5 * 0.01 / std::sqrt(static_cast<double>(n)));
    CHECK(std::sqrt(sq / n) == doctest::Approx(0.01).epsilon(0.05));
    CHECK(a.label == t.label);
    CHECK(a.empty != a.recent); // slots draw from separate streams

    // Each slot's draws depend only on (seed, slot, element).
    SampleTriplet t2 = t;
    t2.current = random_image(r, 64, 64, 4);
    const auto a2 = add_gaussian_noise(t2, {0.01}, 77);
    CHECK(a2.empty == a.empty);
    CHECK(a2.recent == a.recent);
}

TEST_CASE("intermittent object addition") {
    RandomStream r(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto base = random_triplet(r, 12, 13, 4);
        const auto donor = random_triplet(r, 12, 13, 4);
        const auto out = intermittent_object_add(base, donor);
        CHECK(out.empty == base.empty);
        for (std::size_t y = 0; y < 12; ++y)
            for (std::size_t x = 0; x < 13; ++x) {
                const bool m = donor.label.at(y, x);
                CHECK(out.label.at(y, x) == (m || base.label.at(y, x)));
                for (std::size_t k = 0; k < 4; ++k) {
                    CHECK(out.current.at(y, x, k) == (m ? donor.current : base.current).at(y, x, k));
                    CHECK(out.recent.at(y, x, k) == (m ? donor.recent : base.recent).at(y, x, k));
                }
            }
    }
    const auto base = random_triplet(r, 6, 6, 3);
    auto empty_donor = random_triplet(r, 6, 6, 3);
    empty_donor.label = ForegroundMask(6, 6);
    CHECK(intermittent_object_add(base, empty_donor) == base);
    CHECK_THROWS_AS(intermittent_object_add(base, random_triplet(r, 6, 7, 3)), Error);
    CHECK_THROWS_AS(intermittent_object_add(base, random_triplet(r, 6, 6, 4)), Error);
}

} // TEST_SUITE
