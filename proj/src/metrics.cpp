#include "bgaug/metrics.hpp"

#include "bgaug/error.hpp"
#include "bgaug/simd/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bgaug {

std::string_view to_string(Metric m) noexcept {
    switch (m) {
    case Metric::Re: return "re";
    case Metric::Sp: return "sp";
    case Metric::Fpr: return "fpr";
    case Metric::Fnr: return "fnr";
    case Metric::Pwc: return "pwc";
    case Metric::Pr: return "pr";
    case Metric::F1: return "f1";
    }
    return "?";
}

bool higher_is_better(Metric m) noexcept {
    return m == Metric::Re || m == Metric::Sp || m == Metric::Pr || m == Metric::F1;
}

std::string_view to_string(Scope s) noexcept {
    switch (s) {
    case Scope::Video: return "video";
    case Scope::Category: return "category";
    case Scope::Overall: return "overall";
    }
    return "?";
}

double MetricsReport::get(Metric m) const noexcept {
    switch (m) {
    case Metric::Re: return re;
    case Metric::Sp: return sp;
    case Metric::Fpr: return fpr;
    case Metric::Fnr: return fnr;
    case Metric::Pwc: return pwc;
    case Metric::Pr: return pr;
    case Metric::F1: return f1;
    }
    return 0.0;
}

void MetricsReport::set(Metric m, double v) noexcept {
    switch (m) {
    case Metric::Re: re = v; break;
    case Metric::Sp: sp = v; break;
    case Metric::Fpr: fpr = v; break;
    case Metric::Fnr: fnr = v; break;
    case Metric::Pwc: pwc = v; break;
    case Metric::Pr: pr = v; break;
    case Metric::F1: f1 = v; break;
    }
}

ConfusionCounts accumulate_confusion(const ForegroundMask& pred, const GroundTruthMask& gt,
                                     const ForegroundMask& roi) {
    if (pred.height() != gt.height() || pred.width() != gt.width() || roi.height() != gt.height() ||
        roi.width() != gt.width())
        throw Error(ErrorCode::DimensionMismatch, "prediction, ground truth and roi differ in shape");
    const auto t = simd::active().confusion(pred.data().data(), gt.codes().data(), roi.data().data(), gt.size());
    return {t.tp, t.fp, t.fn, t.tn};
}

MetricsReport compute_metrics(const ConfusionCounts& c) {
    MetricsReport r;
    r.counts = c;
    const auto tp = static_cast<double>(c.tp);
    const auto fp = static_cast<double>(c.fp);
    const auto fn = static_cast<double>(c.fn);
    const auto tn = static_cast<double>(c.tn);

    if (c.tp + c.fn > 0) {
        r.re = tp / (tp + fn);
        r.fnr = 1.0 - r.re;
    } else {
        r.degenerate |= kDegenerateRecall;
    }
    if (c.tn + c.fp > 0) {
        r.sp = tn / (tn + fp);
        r.fpr = 1.0 - r.sp;
    } else {
        r.degenerate |= kDegenerateSpecificity;
    }
    if (c.total() > 0) r.pwc = 100.0 * (fp + fn) / (tp + fp + fn + tn);
    else r.degenerate |= kDegeneratePwc;
    if (c.tp + c.fp > 0) r.pr = tp / (tp + fp);
    else r.degenerate |= kDegeneratePrecision;
    if (r.pr + r.re > 0) r.f1 = 2.0 * r.pr * r.re / (r.pr + r.re);
    else r.degenerate |= kDegenerateF1;
    return r;
}

namespace {

MetricsReport mean_of(const std::vector<const MetricsReport*>& members, Scope scope) {
    MetricsReport out;
    out.scope = scope;
    for (const auto* m : members) {
        out.counts += m->counts;
        out.degenerate |= m->degenerate;
    }
    for (Metric metric : kAllMetrics) {
        double sum = 0.0;
        for (const auto* m : members) sum += m->get(metric);
        out.set(metric, sum / static_cast<double>(members.size()));
    }
    return out;
}

} // namespace

ReportTree aggregate(const std::vector<MetricsReport>& videos) {
    if (videos.empty()) throw Error(ErrorCode::EmptyInput, "nothing to aggregate");
    ReportTree tree;
    tree.videos = videos;
    for (auto& v : tree.videos) v.scope = Scope::Video;

    std::map<std::string, std::vector<const MetricsReport*>> by_category;
    for (const auto& v : tree.videos) by_category[v.category].push_back(&v);

    for (const auto& [name, members] : by_category) {
        MetricsReport cat = mean_of(members, Scope::Category);
        cat.category = name;
        tree.categories.push_back(std::move(cat));
    }
    std::vector<const MetricsReport*> cats;
    for (const auto& c : tree.categories) cats.push_back(&c);
    tree.overall = mean_of(cats, Scope::Overall);
    return tree;
}

std::vector<double> fractional_ranks(const std::vector<double>& values, bool higher_better) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return higher_better ? values[a] > values[b] : values[a] < values[b];
    });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share rank mean(i+1 .. j+1)
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

RankingTable rank_methods(const std::vector<MethodResults>& methods) {
    if (methods.empty()) throw Error(ErrorCode::EmptyInput, "no methods to rank");

    auto category_names = [](const MethodResults& m) {
        std::vector<std::string> names;
        for (const auto& c : m.categories) names.push_back(c.category);
        std::sort(names.begin(), names.end());
        return names;
    };
    RankingTable table;
    table.categories = category_names(methods.front());
    if (std::adjacent_find(table.categories.begin(), table.categories.end()) != table.categories.end())
        throw Error(ErrorCode::MismatchedCategories, "duplicate category in " + methods.front().method);
    for (const auto& m : methods)
        if (category_names(m) != table.categories)
            throw Error(ErrorCode::MismatchedCategories, "method " + m.method + " covers different categories");

    const std::size_t nm = methods.size();
    const std::size_t nc = table.categories.size();
    // lookup[method][category index]
    std::vector<std::vector<const MetricsReport*>> lookup(nm, std::vector<const MetricsReport*>(nc));
    for (std::size_t i = 0; i < nm; ++i)
        for (const auto& c : methods[i].categories) {
            const auto pos = std::lower_bound(table.categories.begin(), table.categories.end(), c.category) -
                             table.categories.begin();
            lookup[i][static_cast<std::size_t>(pos)] = &c;
        }

    table.methods.resize(nm);
    for (std::size_t i = 0; i < nm; ++i) {
        table.methods[i].method = methods[i].method;
        table.methods[i].category_ranks.resize(nc);
    }
    for (std::size_t mi = 0; mi < kAllMetrics.size(); ++mi) {
        const Metric metric = kAllMetrics[mi];
        std::vector<double> vals(nm);
        for (std::size_t i = 0; i < nm; ++i) vals[i] = methods[i].overall.get(metric);
        const auto overall = fractional_ranks(vals, higher_is_better(metric));
        for (std::size_t i = 0; i < nm; ++i) table.methods[i].overall_ranks[mi] = overall[i];

        for (std::size_t c = 0; c < nc; ++c) {
            for (std::size_t i = 0; i < nm; ++i) vals[i] = lookup[i][c]->get(metric);
            const auto ranks = fractional_ranks(vals, higher_is_better(metric));
            for (std::size_t i = 0; i < nm; ++i) table.methods[i].category_ranks[c][mi] = ranks[i];
        }
    }
    for (auto& m : table.methods) {
        m.r = std::accumulate(m.overall_ranks.begin(), m.overall_ranks.end(), 0.0) / 7.0;
        double cat_sum = 0.0;
        for (const auto& cr : m.category_ranks) cat_sum += std::accumulate(cr.begin(), cr.end(), 0.0) / 7.0;
        m.r_cat = nc > 0 ? cat_sum / static_cast<double>(nc) : m.r;
    }
    return table;
}

} // namespace bgaug
