#include "bgaug/error.hpp"
#include "bgaug/split.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace bgaug;

namespace {

Fold fold_of(const SplitManifest& m, const std::string& cat, const std::string& video) {
    for (const auto& e : m.entries)
        if (e.category == cat && e.video == video) return e.fold;
    FAIL("not in manifest: " << cat << "/" << video);
    return Fold::S1;
}

} // namespace

TEST_SUITE("split") {

TEST_CASE("builtin manifest shape") {
    const auto m = builtin_split();
    CHECK(m.entries.size() == 53);
    CHECK(m.categories().size() == 11);
    CHECK(m.fold_size(Fold::S1) == 14);
    CHECK(m.fold_size(Fold::S2) == 13);
    CHECK(m.fold_size(Fold::S3) == 13);
    CHECK(m.fold_size(Fold::S4) == 13);
    CHECK(validate_split(m).empty());
}

TEST_CASE("table rows") {
    const auto m = builtin_split();
    CHECK(fold_of(m, "PTZ", "zoomInZoomOut") == Fold::S3);
    CHECK(fold_of(m, "baseline", "highway") == Fold::S1);
    CHECK(fold_of(m, "baseline", "pedestrians") == Fold::S2);
    CHECK(fold_of(m, "baseline", "office") == Fold::S3);
    CHECK(fold_of(m, "baseline", "PETS2006") == Fold::S4);
    CHECK(fold_of(m, "thermal", "lakeSide") == Fold::S1);
    CHECK(fold_of(m, "nightVideos", "busyBoulvard") == Fold::S1);
    CHECK(fold_of(m, "lowFramerate", "tunnelExit_0_35fps") == Fold::S3);
    CHECK(fold_of(m, "intermittentObjectMotion", "abandonedBox") == Fold::S3);
    CHECK(fold_of(m, "shadow", "backdoor") == Fold::S4);
    CHECK(fold_of(m, "dynamicBackground", "boats") == Fold::S2);
    CHECK(fold_of(m, "turbulence", "turbulence3") == Fold::S4);

    // Each category is spread over at least three folds; four-video categories get one per fold.
    std::map<std::string, std::set<Fold>> folds;
    std::map<std::string, int> sizes;
    for (const auto& e : m.entries) {
        folds[e.category].insert(e.fold);
        ++sizes[e.category];
    }
    for (const auto& [cat, fs] : folds) {
        CAPTURE(cat);
        CHECK(fs.size() >= 3);
        if (sizes[cat] == 4) CHECK(fs.size() == 4);
    }
}

TEST_CASE("fold plans partition the videos") {
    const auto m = builtin_split();
    std::set<std::string> tested;
    for (Fold f : {Fold::S1, Fold::S2, Fold::S3, Fold::S4}) {
        const auto plan = fold_plan(m, f);
        CHECK(plan.train.size() + plan.test.size() == 53);
        std::set<std::string> train;
        for (const auto& e : plan.train) train.insert(e.category + "/" + e.video);
        for (const auto& e : plan.test) {
            CHECK(e.fold == f);
            CHECK(train.count(e.category + "/" + e.video) == 0);
            CHECK(tested.insert(e.category + "/" + e.video).second);
        }
    }
    CHECK(tested.size() == 53);
    CHECK(fold_plan(m, "S1").test.size() == 14);
    CHECK(fold_plan(m, "S1").train.size() == 39);
}

TEST_CASE("fold names") {
    CHECK(parse_fold("S2") == Fold::S2);
    CHECK(parse_fold("s4") == Fold::S4);
    CHECK(parse_fold("3") == Fold::S3);
    for (const char* bad : {"S5", "S0", "", "fold1", "S12"}) {
        CAPTURE(bad);
        try {
            parse_fold(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnknownFold);
        }
    }
    CHECK_THROWS_AS(fold_plan(builtin_split(), "S9"), Error);
}

TEST_CASE("duplicates are reported") {
    auto m = builtin_split();
    m.entries.push_back(m.entries.front());
    CHECK(!validate_split(m).empty());
}

} // TEST_SUITE
