#include "bgaug/error.hpp"
#include "bgaug/metrics.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace bgaug;

namespace {

MetricsReport video(const std::string& cat, const std::string& name, ConfusionCounts c) {
    MetricsReport r = compute_metrics(c);
    r.category = cat;
    r.video = name;
    return r;
}

// rank = 1 + (#strictly better) + (#tied others) / 2
double brute_rank(const std::vector<double>& v, std::size_t i, bool higher_better) {
    double better = 0, tied = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j == i) continue;
        if (v[j] == v[i]) ++tied;
        else if (higher_better ? v[j] > v[i] : v[j] < v[i]) ++better;
    }
    return 1.0 + better + tied / 2.0;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("reference confusion fixture") {
    const auto m = compute_metrics({50, 10, 10, 930});
    CHECK(m.re == doctest::Approx(0.8333333333).epsilon(1e-9));
    CHECK(m.pr == doctest::Approx(0.8333333333).epsilon(1e-9));
    CHECK(m.f1 == doctest::Approx(0.8333333333).epsilon(1e-9));
    CHECK(std::abs(m.pwc - 2.0) < 1e-9);
    CHECK(m.sp == doctest::Approx(930.0 / 940.0));
    CHECK(m.fpr == doctest::Approx(10.0 / 940.0));
    CHECK(m.fnr == doctest::Approx(10.0 / 60.0));
    CHECK(m.degenerate == 0);
}

TEST_CASE("complementary rates sum to one exactly") {
    RandomStream r(1);
    for (int i = 0; i < 1000; ++i) {
        const ConfusionCounts c{r.below(100000), r.below(100000), r.below(100000) + 1, r.below(100000) + 1};
        const auto m = compute_metrics(c);
        CHECK(m.re + m.fnr == 1.0);
        CHECK(m.sp + m.fpr == 1.0);
    }
}

TEST_CASE("zero denominators are flagged") {
    const auto none = compute_metrics({});
    CHECK(none.degenerate == (kDegenerateRecall | kDegenerateSpecificity | kDegeneratePwc |
                              kDegeneratePrecision | kDegenerateF1));
    CHECK(none.re == 0.0);
    CHECK(none.pwc == 0.0);
    const auto all_bg = compute_metrics({0, 0, 0, 100});
    CHECK(all_bg.degenerate == (kDegenerateRecall | kDegeneratePrecision | kDegenerateF1));
    CHECK(all_bg.sp == 1.0);
    CHECK(all_bg.pwc == 0.0);
}

TEST_CASE("shadow counts as background, unknown motion and outside-ROI are skipped") {
    // Ground truth codes, one pixel each:
    //   bg, fg, shadow, shadow, unknown, unknown, out-of-roi, fg(roi 0)
    GroundTruthMask gt(1, 8);
    const GtLabel labels[] = {GtLabel::Background,    GtLabel::Foreground,    GtLabel::HardShadow,
                              GtLabel::HardShadow,    GtLabel::UnknownMotion, GtLabel::UnknownMotion,
                              GtLabel::OutOfRoi,      GtLabel::Foreground};
    for (std::size_t i = 0; i < 8; ++i) gt.set(0, i, labels[i]);
    const ForegroundMask pred(1, 8, std::vector<std::uint8_t>{0, 1, 1, 0, 1, 0, 1, 1});
    const ForegroundMask roi(1, 8, std::vector<std::uint8_t>{1, 1, 1, 1, 1, 1, 1, 0});
    const auto c = accumulate_confusion(pred, gt, roi);
    CHECK(c.tp == 1); // fg predicted fg
    CHECK(c.fp == 1); // shadow predicted fg
    CHECK(c.tn == 2); // bg and shadow predicted bg
    CHECK(c.fn == 0);
    CHECK(c.total() == 4);
    CHECK_THROWS_AS(accumulate_confusion(ForegroundMask(1, 7), gt, roi), Error);
}

TEST_CASE("perfect and empty predictions") {
    RandomStream r(2);
    const auto fg = testing::random_mask(r, 10, 10, 0.4);
    GroundTruthMask gt(10, 10);
    for (std::size_t y = 0; y < 10; ++y)
        for (std::size_t x = 0; x < 10; ++x) gt.set(y, x, fg.at(y, x) ? GtLabel::Foreground : GtLabel::Background);
    const ForegroundMask roi(10, 10, 1);
    CHECK(compute_metrics(accumulate_confusion(fg, gt, roi)).f1 == 1.0);
    CHECK(compute_metrics(accumulate_confusion(ForegroundMask(10, 10), gt, roi)).re == 0.0);
}

TEST_CASE("aggregation averages videos per category, then categories") {
    std::vector<MetricsReport> videos{video("b", "v1", {10, 0, 0, 10}), video("a", "v2", {5, 5, 5, 5}),
                                      video("b", "v3", {0, 10, 10, 0}), video("a", "v4", {10, 0, 10, 0})};
    const auto tree = aggregate(videos);
    REQUIRE(tree.categories.size() == 2);
    CHECK(tree.categories[0].category == "a");
    CHECK(tree.categories[0].scope == Scope::Category);
    CHECK(tree.categories[0].re == doctest::Approx((0.5 + 0.5) / 2));
    CHECK(tree.categories[1].re == doctest::Approx((1.0 + 0.0) / 2));
    CHECK(tree.overall.scope == Scope::Overall);
    CHECK(tree.overall.re == doctest::Approx(0.5));
    CHECK(tree.overall.pwc == doctest::Approx(((50.0 + 50.0) / 2 + (0.0 + 100.0) / 2) / 2));
    CHECK(tree.overall.counts.total() == 80);
    CHECK(tree.categories[1].degenerate != 0); // v3 has no true positives
    CHECK_THROWS_AS(aggregate({}), Error);
}

TEST_CASE("fractional ranks agree with a brute-force count") {
    RandomStream r(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(1 + r.below(9));
        for (auto& x : v) x = static_cast<double>(r.below(5)) / 4.0; // plenty of ties
        const bool hb = r.bernoulli(0.5);
        const auto ranks = fractional_ranks(v, hb);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(ranks[i] == brute_rank(v, i, hb));
    }
}

TEST_CASE("method ranking") {
    auto method = [](const std::string& name, double quality) {
        MethodResults m;
        m.method = name;
        for (const char* cat : {"x", "y"}) {
            MetricsReport r = compute_metrics({static_cast<std::uint64_t>(quality * 100), 10, 10, 100});
            r.category = cat;
            m.categories.push_back(r);
        }
        m.overall = compute_metrics({static_cast<std::uint64_t>(quality * 100), 10, 10, 100});
        return m;
    };
    const auto single = rank_methods({method("only", 0.5)});
    CHECK(single.methods[0].r == 1.0);
    CHECK(single.methods[0].r_cat == 1.0);

    // "good" has more true positives with the same errors: better on every metric except sp/fpr,
    // which are tied.
    const auto pair = rank_methods({method("weak", 0.2), method("good", 0.9)});
    const auto& weak = pair.methods[0];
    const auto& good = pair.methods[1];
    CHECK(good.overall_ranks[static_cast<std::size_t>(Metric::F1)] == 1.0);
    CHECK(weak.overall_ranks[static_cast<std::size_t>(Metric::F1)] == 2.0);
    CHECK(good.overall_ranks[static_cast<std::size_t>(Metric::Sp)] == 1.5);
    CHECK(good.r < weak.r);
    CHECK(good.r + weak.r == doctest::Approx(3.0));
    CHECK(good.r_cat == doctest::Approx(good.r));

    auto odd = method("odd", 0.5);
    odd.categories[1].category = "z";
    CHECK_THROWS_AS(rank_methods({method("a", 0.1), odd}), Error);
    CHECK_THROWS_AS(rank_methods({}), Error);
}

TEST_CASE("metric names") {
    CHECK(to_string(Metric::Pwc) == "pwc");
    CHECK(higher_is_better(Metric::F1));
    CHECK_FALSE(higher_is_better(Metric::Fpr));
    MetricsReport r;
    for (std::size_t i = 0; i < kAllMetrics.size(); ++i) r.set(kAllMetrics[i], static_cast<double>(i));
    for (std::size_t i = 0; i < kAllMetrics.size(); ++i) CHECK(r.get(kAllMetrics[i]) == static_cast<double>(i));
}

} // TEST_SUITE
