#include "bgaug/error.hpp"
#include "bgaug/report_io.hpp"

#include "test_support.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using namespace bgaug;
using namespace bgaug::testing;

namespace {

MetricsReport video(std::string cat, std::string name, ConfusionCounts c) {
    auto m = compute_metrics(c);
    m.category = std::move(cat);
    m.video = std::move(name);
    return m;
}

ReportTree sample_tree() {
    return aggregate({video("baseline", "highway", {50, 10, 10, 930}), video("baseline", "office", {5, 0, 3, 90}),
                      video("shadow", "cubicle", {0, 4, 0, 60})});
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_SUITE("report_io") {

TEST_CASE("csv round trip") {
    const auto tree = sample_tree();
    std::stringstream ss;
    write_report_csv(ss, tree);
    const auto text = ss.str();
    CHECK(text.rfind("scope,category,video,tp,fp,fn,tn,re,sp,fpr,fnr,pwc,pr,f1,degenerate\n", 0) == 0);
    CHECK(line_count(text) == 1 + 3 + 2 + 1);

    const auto rows = read_report_csv(ss);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].scope == Scope::Video);
    CHECK(rows[0].counts == tree.videos[0].counts);
    CHECK(rows[0].video == tree.videos[0].video);
    CHECK(rows[5].scope == Scope::Overall);
    for (auto m : kAllMetrics) CHECK(rows[5].get(m) == doctest::Approx(tree.overall.get(m)).epsilon(1e-9));
    CHECK(rows[4].category == "shadow");
    CHECK(rows[4].degenerate == tree.categories[1].degenerate);
    CHECK(rows[4].degenerate != 0);
}

TEST_CASE("scope filtering") {
    const auto tree = sample_tree();
    std::stringstream cat, all;
    write_report_csv(cat, tree, Scope::Category);
    write_report_csv(all, tree, Scope::Overall);
    CHECK(line_count(cat.str()) == 1 + 2 + 1);
    CHECK(line_count(all.str()) == 2);
    CHECK(parse_scope("video") == Scope::Video);
    CHECK(parse_scope("category") == Scope::Category);
    CHECK(parse_scope("overall") == Scope::Overall);
    CHECK_THROWS_AS(parse_scope("frame"), Error);
}

TEST_CASE("json report") {
    const auto j = nlohmann::json::parse(report_json(sample_tree()));
    CHECK(j.contains("overall"));
    CHECK(j.dump().find("highway") != std::string::npos);
    const auto k = nlohmann::json::parse(report_json(sample_tree(), Scope::Overall));
    CHECK(k.dump().find("highway") == std::string::npos);
}

TEST_CASE("malformed csv") {
    std::stringstream bad("scope,category,video,tp,fp,fn,tn,re,sp,fpr,fnr,pwc,pr,f1,degenerate\nvideo,a,b,1,2\n");
    CHECK_THROWS_AS(read_report_csv(bad), Error);
    std::stringstream badnum(
        "scope,category,video,tp,fp,fn,tn,re,sp,fpr,fnr,pwc,pr,f1,degenerate\nvideo,a,b,x,0,0,0,0,0,0,0,0,0,0,0\n");
    CHECK_THROWS_AS(read_report_csv(badnum), Error);
    try {
        read_report_csv(std::filesystem::path("/nonexistent/report.csv"));
        FAIL("expected MissingFile");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingFile);
    }
}

TEST_CASE("ranking csv") {
    const auto tree = sample_tree();
    std::stringstream a, b;
    write_report_csv(a, tree, Scope::Category);
    auto worse = tree;
    for (auto& c : worse.categories) c.f1 -= 0.1;
    worse.overall.f1 -= 0.1;
    write_report_csv(b, worse, Scope::Category);
    const auto ma = method_results("good", read_report_csv(a));
    const auto mb = method_results("bad", read_report_csv(b));
    CHECK(ma.categories.size() == 2);
    const auto table = rank_methods({ma, mb});
    std::stringstream out;
    write_ranking_csv(out, table);
    const auto text = out.str();
    CHECK(text.rfind("method,R,R_cat", 0) == 0);
    CHECK(line_count(text) == 3);
    CHECK(text.find("good") != std::string::npos);

    std::stringstream v;
    write_report_csv(v, tree, Scope::Video);
    auto rows = read_report_csv(v);
    rows.pop_back();
    CHECK_THROWS_AS(method_results("x", rows), Error);
}

} // TEST_SUITE
