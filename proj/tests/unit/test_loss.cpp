#include "bgaug/error.hpp"
#include "bgaug/loss.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace bgaug;
using bgaug::testing::jaccard_oracle;
using bgaug::testing::random_map;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

} // namespace

TEST_SUITE("loss") {

TEST_CASE("hand-evaluated case") {
    const ForegroundMask y(1, 2, std::vector<std::uint8_t>{1, 0});
    const ProbabilityMap p{1, 2, {0.5f, 0.5f}};
    // (1 + 0.5) / (1 + 1 + 0.5)
    const auto res = relaxed_jaccard(y, p, 1.0);
    CHECK(res.value == 0.6);
    CHECK(relaxed_jaccard_value(y, p, 1.0) == 0.6);
    // dJ/dp0 = (1 * 2.5 - 0) / 6.25, dJ/dp1 = -1.5 / 6.25
    CHECK(res.gradient[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(res.gradient[1] == doctest::Approx(-0.24).epsilon(1e-15));
}

TEST_CASE("value matches the definition") {
    RandomStream r(1);
    for (int i = 0; i < 50; ++i) {
        const std::size_t h = 1 + r.below(20), w = 1 + r.below(20);
        const auto y = testing::random_mask(r, h, w, r.uniform01());
        const auto p = random_map(r, h, w);
        const double t = r.uniform(0.01, 3.0);
        CHECK(relaxed_jaccard_value(y, p, t) == doctest::Approx(jaccard_oracle(y, p, t)).epsilon(1e-12));
    }
}

TEST_CASE("gradient matches central differences") {
    RandomStream r(2);
    const float h = 1.0f / 1024.0f; // exact in float
    for (int inst = 0; inst < 20; ++inst) {
        const std::size_t rows = 1 + r.below(6), cols = 1 + r.below(6);
        const auto y = testing::random_mask(r, rows, cols, 0.5);
        const auto p = random_map(r, rows, cols, 0.01, 0.99);
        const double t = r.uniform(0.1, 2.0);
        const auto res = relaxed_jaccard(y, p, t);
        for (std::size_t i = 0; i < p.data.size(); ++i) {
            auto plus = p, minus = p;
            plus.data[i] += h;
            minus.data[i] -= h;
            const double step = static_cast<double>(plus.data[i]) - static_cast<double>(minus.data[i]);
            const double fd = (jaccard_oracle(y, plus, t) - jaccard_oracle(y, minus, t)) / step;
            CHECK(std::abs(res.gradient[i] - fd) <= 1e-5 * std::abs(fd));
        }
    }
}

TEST_CASE("perfect prediction scores one") {
    RandomStream r(3);
    for (int i = 0; i < 20; ++i) {
        const auto y = testing::random_mask(r, 8, 9, r.uniform01());
        ProbabilityMap p{8, 9, std::vector<float>(72)};
        for (std::size_t k = 0; k < 72; ++k) p.data[k] = y.data()[k];
        CHECK(relaxed_jaccard_value(y, p, 1.0) == 1.0);
    }
    const ForegroundMask none(4, 4);
    CHECK(relaxed_jaccard_value(none, ProbabilityMap{4, 4, std::vector<float>(16, 0.0f)}, 1.0) == 1.0);
}

TEST_CASE("threshold and errors") {
    const ProbabilityMap p{1, 4, {0.2f, 0.5f, 0.7f, 0.49999997f}};
    const auto m = threshold(p, 0.5);
    CHECK(m.data()[0] == 0);
    CHECK(m.data()[1] == 1);
    CHECK(m.data()[2] == 1);
    CHECK(m.data()[3] == 0);

    const ForegroundMask y(1, 4);
    CHECK(code_of([&] { relaxed_jaccard(y, p, 0.0); }) == ErrorCode::NonPositiveSmoothing);
    CHECK(code_of([&] { relaxed_jaccard(ForegroundMask(2, 2), p, 1.0); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { relaxed_jaccard(y, ProbabilityMap{1, 4, {0.f, 1.5f, 0.f, 0.f}}, 1.0); }) ==
          ErrorCode::InvalidArgument);
}

} // TEST_SUITE
