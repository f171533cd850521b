#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bgaug {

enum class Fold { S1, S2, S3, S4 };
std::string_view to_string(Fold f) noexcept;
/// Accepts "S1".."S4" (case-insensitive) or "1".."4". Throws UnknownFold.
Fold parse_fold(std::string_view s);

struct SplitEntry {
    std::string category;
    std::string video;
    Fold fold = Fold::S1;

    friend bool operator==(const SplitEntry&, const SplitEntry&) = default;
};

struct SplitManifest {
    std::vector<SplitEntry> entries;

    std::size_t fold_size(Fold f) const noexcept;
    std::vector<std::string> categories() const; // sorted, unique
};

/// The four-fold CDNet-2014 assignment. Names follow the dataset's directory names.
SplitManifest builtin_split();

struct FoldPlan {
    std::vector<SplitEntry> train;
    std::vector<SplitEntry> test;
};

FoldPlan fold_plan(const SplitManifest& manifest, Fold test_fold);
/// Throws UnknownFold when the name does not parse.
FoldPlan fold_plan(const SplitManifest& manifest, std::string_view test_fold);

/// Partition problems (duplicates, empty folds); empty when valid.
std::vector<std::string> validate_split(const SplitManifest& manifest);

} // namespace bgaug
