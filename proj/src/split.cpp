#include "bgaug/split.hpp"

#include "bgaug/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace bgaug {

std::string_view to_string(Fold f) noexcept {
    switch (f) {
    case Fold::S1: return "S1";
    case Fold::S2: return "S2";
    case Fold::S3: return "S3";
    case Fold::S4: return "S4";
    }
    return "?";
}

Fold parse_fold(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == 'S' || digits.front() == 's')) digits.remove_prefix(1);
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '4') return static_cast<Fold>(digits[0] - '1');
    throw Error(ErrorCode::UnknownFold, "unknown fold '" + std::string(s) + "'");
}

std::size_t SplitManifest::fold_size(Fold f) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [f](const SplitEntry& e) { return e.fold == f; }));
}

std::vector<std::string> SplitManifest::categories() const {
    std::set<std::string> names;
    for (const auto& e : entries) names.insert(e.category);
    return {names.begin(), names.end()};
}

SplitManifest builtin_split() {
    using enum Fold;
    static const std::pair<const char*, std::vector<std::pair<const char*, Fold>>> table[] = {
        {"baseline", {{"highway", S1}, {"pedestrians", S2}, {"office", S3}, {"PETS2006", S4}}},
        {"badWeather", {{"blizzard", S1}, {"skating", S2}, {"wetSnow", S3}, {"snowFall", S4}}},
        {"intermittentObjectMotion",
         {{"sofa", S1}, {"winterDriveway", S2}, {"parking", S3}, {"abandonedBox", S3}, {"streetLight", S4},
          {"tramstop", S4}}},
        {"lowFramerate",
         {{"port_0_17fps", S1}, {"tramCrossroad_1fps", S2}, {"tunnelExit_0_35fps", S3}, {"turnpike_0_5fps", S4}}},
        {"PTZ", {{"continuousPan", S1}, {"intermittentPan", S2}, {"zoomInZoomOut", S3}, {"twoPositionPTZCam", S4}}},
        {"thermal", {{"corridor", S1}, {"lakeSide", S1}, {"library", S2}, {"diningRoom", S3}, {"park", S4}}},
        {"cameraJitter", {{"badminton", S1}, {"traffic", S2}, {"boulevard", S3}, {"sidewalk", S4}}},
        {"shadow",
         {{"copyMachine", S1}, {"busStation", S2}, {"cubicle", S3}, {"peopleInShade", S3}, {"bungalows", S4},
          {"backdoor", S4}}},
        {"dynamicBackground",
         {{"overpass", S1}, {"fountain02", S1}, {"fountain01", S2}, {"boats", S2}, {"canoe", S3}, {"fall", S4}}},
        {"nightVideos",
         {{"bridgeEntry", S1}, {"busyBoulvard", S1}, {"tramStation", S2}, {"winterStreet", S2},
          {"fluidHighway", S3}, {"streetCornerAtNight", S4}}},
        {"turbulence", {{"turbulence0", S1}, {"turbulence1", S2}, {"turbulence2", S3}, {"turbulence3", S4}}},
    };
    SplitManifest m;
    for (const auto& [category, videos] : table)
        for (const auto& [video, fold] : videos) m.entries.push_back({category, video, fold});
    return m;
}

FoldPlan fold_plan(const SplitManifest& manifest, Fold test_fold) {
    FoldPlan plan;
    for (const auto& e : manifest.entries) (e.fold == test_fold ? plan.test : plan.train).push_back(e);
    return plan;
}

FoldPlan fold_plan(const SplitManifest& manifest, std::string_view test_fold) {
    return fold_plan(manifest, parse_fold(test_fold));
}

std::vector<std::string> validate_split(const SplitManifest& manifest) {
    std::vector<std::string> problems;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : manifest.entries)
        if (!seen.emplace(e.category, e.video).second)
            problems.push_back("duplicate video " + e.category + "/" + e.video);
    for (Fold f : {Fold::S1, Fold::S2, Fold::S3, Fold::S4})
        if (manifest.fold_size(f) == 0) problems.push_back("fold " + std::string(to_string(f)) + " is empty");
    return problems;
}

} // namespace bgaug
