#include "bgaug/background.hpp"
#include "bgaug/error.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>

using namespace bgaug;
using namespace bgaug::testing;

TEST_SUITE("background") {

TEST_CASE("batch median matches the sort oracle") {
    RandomStream r(1);
    for (std::size_t n : {1u, 2u, 5u, 30u, 101u}) {
        std::vector<MultiChannelImage> frames;
        for (std::size_t i = 0; i < n; ++i)
            frames.push_back(i % 2 ? random_image(r, 7, 9, 3) : coarse_image(r, 7, 9, 3));
        for (std::size_t window : {1u, 3u, 30u, 100u, 1000u}) {
            CAPTURE(n);
            CAPTURE(window);
            CHECK(median_background(frames, window) == sort_median(frames, window));
        }
        std::vector<const MultiChannelImage*> p;
        for (const auto& f : frames) p.push_back(&f);
        CHECK(median_background(p, kRecentWindow) == sort_median(frames, kRecentWindow));
    }
}

TEST_CASE("batch median spans more than one tile") {
    RandomStream r(2);
    std::vector<MultiChannelImage> frames;
    for (int i = 0; i < 9; ++i) frames.push_back(random_image(r, 41, 37, 4)); // 6068 elements
    CHECK(median_background(frames) == sort_median(frames, 100));
}

TEST_CASE("median errors") {
    std::vector<MultiChannelImage> none;
    CHECK_THROWS_AS(median_background(none), Error);
    RandomStream r(3);
    std::vector<MultiChannelImage> mixed{random_image(r, 3, 3, 3), random_image(r, 3, 4, 3)};
    CHECK_THROWS_AS(median_background(mixed), Error);
    std::vector<MultiChannelImage> one{random_image(r, 3, 3, 3)};
    CHECK_THROWS_AS(median_background(one, 0), Error);
    CHECK_THROWS_AS(MedianWindow(2, 2, 3, 0), Error);
    CHECK_THROWS_AS(MedianWindow(2, 2, 3, 256), Error);
    MedianWindow w(2, 2, 3, 5);
    CHECK_THROWS_AS(w.push(random_image(r, 2, 3, 3)), Error);
    RunningMedian rm(2, 2, 3);
    CHECK_THROWS_AS(rm.result(), Error);
}

TEST_CASE("streaming median matches the batch oracle after every push") {
    RandomStream r(4);
    for (int seq = 0; seq < 40; ++seq) {
        const std::size_t window = 1 + r.below(100);
        const std::size_t pushes = 1 + r.below(160);
        const std::size_t h = 1 + r.below(6), w = 1 + r.below(6);
        MedianWindow mw(h, w, 3, window);
        std::vector<MultiChannelImage> history;
        for (std::size_t i = 0; i < pushes; ++i) {
            history.push_back(r.bernoulli(0.5) ? coarse_image(r, h, w, 3) : random_image(r, h, w, 3));
            const auto& got = mw.push(history.back());
            REQUIRE(got == sort_median(history, window));
        }
        CHECK(mw.size() == std::min(window, pushes));
    }
}

TEST_CASE("window of one returns the last frame, constant input is a fixed point") {
    RandomStream r(5);
    MedianWindow one(3, 3, 3, 1);
    for (int i = 0; i < 5; ++i) {
        const auto f = coarse_image(r, 3, 3, 3);
        CHECK(one.push(f) == f);
    }
    const MultiChannelImage constant(4, 4, 3, from_u8(77));
    MedianWindow mw(4, 4, 3, kRecentWindow);
    for (int i = 0; i < 120; ++i) CHECK(mw.push(constant) == constant);
}

TEST_CASE("running median and empty background strategies") {
    RandomStream r(6);
    std::vector<MultiChannelImage> frames;
    RunningMedian rm(5, 4, 3);
    for (int i = 0; i < 57; ++i) {
        frames.push_back(random_image(r, 5, 4, 3));
        rm.push(frames.back());
    }
    CHECK(rm.size() == 57);
    CHECK(rm.result() == sort_median(frames, frames.size()));
    CHECK(empty_background(frames, GlobalMedian{}) == rm.result());
    CHECK(empty_background(frames, ManualFrame{7}) == frames[7]);
    try {
        empty_background(frames, ManualFrame{57});
        FAIL("expected FrameIdOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FrameIdOutOfRange);
    }
    std::vector<MultiChannelImage> none;
    CHECK_THROWS_AS(empty_background(none, GlobalMedian{}), Error);
}

} // TEST_SUITE
