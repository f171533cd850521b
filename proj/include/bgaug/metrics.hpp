#pragma once

#include "bgaug/image.hpp"
#include "bgaug/labels.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bgaug {

struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    ConfusionCounts& operator+=(const ConfusionCounts& o) noexcept {
        tp += o.tp;
        fp += o.fp;
        fn += o.fn;
        tn += o.tn;
        return *this;
    }
    std::uint64_t total() const noexcept { return tp + fp + fn + tn; }
    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Pixels outside roi or labeled UnknownMotion/OutOfRoi are skipped; HardShadow
/// counts as background ground truth.
ConfusionCounts accumulate_confusion(const ForegroundMask& pred, const GroundTruthMask& gt, const ForegroundMask& roi);

enum class Metric { Re, Sp, Fpr, Fnr, Pwc, Pr, F1 };
inline constexpr std::array<Metric, 7> kAllMetrics{Metric::Re, Metric::Sp, Metric::Fpr, Metric::Fnr,
                                                   Metric::Pwc, Metric::Pr, Metric::F1};
std::string_view to_string(Metric m) noexcept;
bool higher_is_better(Metric m) noexcept;

enum class Scope { Video, Category, Overall };
std::string_view to_string(Scope s) noexcept;

/// Bits set in MetricsReport::degenerate when a denominator was zero and the
/// metric was reported as 0.
enum DegenerateFlag : unsigned {
    kDegenerateRecall = 1u << 0,      // tp + fn == 0 (re, fnr)
    kDegenerateSpecificity = 1u << 1, // tn + fp == 0 (sp, fpr)
    kDegeneratePwc = 1u << 2,         // no evaluated pixels
    kDegeneratePrecision = 1u << 3,   // tp + fp == 0
    kDegenerateF1 = 1u << 4,          // pr + re == 0
};

struct MetricsReport {
    ConfusionCounts counts;
    double re = 0, sp = 0, fpr = 0, fnr = 0, pwc = 0, pr = 0, f1 = 0;
    Scope scope = Scope::Video;
    std::string category;
    std::string video;
    unsigned degenerate = 0;

    double get(Metric m) const noexcept;
    void set(Metric m, double v) noexcept;
};

/// re = tp/(tp+fn), sp = tn/(tn+fp), fpr = 1-sp, fnr = 1-re,
/// pwc = 100 (fp+fn)/total, pr = tp/(tp+fp), f1 = 2 pr re/(pr+re).
MetricsReport compute_metrics(const ConfusionCounts& c);

struct ReportTree {
    std::vector<MetricsReport> videos;
    std::vector<MetricsReport> categories; // sorted by name
    MetricsReport overall;
};

/// Category metric = unweighted mean over its videos; overall = unweighted
/// mean over categories. Counts are summed. Throws EmptyInput.
ReportTree aggregate(const std::vector<MetricsReport>& videos);

struct MethodResults {
    std::string method;
    std::vector<MetricsReport> categories;
    MetricsReport overall;
};

struct MethodRanking {
    std::string method;
    std::array<double, 7> overall_ranks{};                 // per metric, on overall values
    std::vector<std::array<double, 7>> category_ranks;     // per category, per metric
    double r = 0.0;                                        // mean of overall_ranks
    double r_cat = 0.0;                                    // mean over categories of mean rank
};

struct RankingTable {
    std::vector<std::string> categories;
    std::vector<MethodRanking> methods;
};

/// Ranks per metric (1 = best, ties share the mean of their positions).
/// Throws EmptyInput or MismatchedCategories.
RankingTable rank_methods(const std::vector<MethodResults>& methods);

/// Fractional ranks of values; better = smaller rank.
std::vector<double> fractional_ranks(const std::vector<double>& values, bool higher_better);

} // namespace bgaug
