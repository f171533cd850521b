#include "bgaug/report_io.hpp"

#include "bgaug/error.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace bgaug {

namespace {

constexpr const char* kHeader = "scope,category,video,tp,fp,fn,tn,re,sp,fpr,fnr,pwc,pr,f1,degenerate";

bool included(Scope row, Scope finest) noexcept { return static_cast<int>(row) >= static_cast<int>(finest); }

void put_row(std::ostream& out, const MetricsReport& r) {
    out << fmt::format("{},{},{},{},{},{},{}", to_string(r.scope), r.category, r.video, r.counts.tp, r.counts.fp,
                       r.counts.fn, r.counts.tn);
    for (Metric m : kAllMetrics) out << fmt::format(",{:.10f}", r.get(m));
    out << ',' << r.degenerate << '\n';
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

nlohmann::json to_json(const MetricsReport& r) {
    nlohmann::json j;
    j["scope"] = to_string(r.scope);
    j["category"] = r.category;
    j["video"] = r.video;
    j["counts"] = {{"tp", r.counts.tp}, {"fp", r.counts.fp}, {"fn", r.counts.fn}, {"tn", r.counts.tn}};
    for (Metric m : kAllMetrics) j[std::string(to_string(m))] = r.get(m);
    j["degenerate"] = r.degenerate;
    return j;
}

} // namespace

Scope parse_scope(std::string_view s) {
    if (s == "video") return Scope::Video;
    if (s == "category") return Scope::Category;
    if (s == "overall") return Scope::Overall;
    throw Error(ErrorCode::InvalidArgument, "unknown scope '" + std::string(s) + "'");
}

void write_report_csv(std::ostream& out, const ReportTree& tree, Scope finest) {
    out << kHeader << '\n';
    if (included(Scope::Video, finest))
        for (const auto& v : tree.videos) put_row(out, v);
    if (included(Scope::Category, finest))
        for (const auto& c : tree.categories) put_row(out, c);
    put_row(out, tree.overall);
}

void write_report_csv(const std::filesystem::path& path, const ReportTree& tree, Scope finest) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot create " + path.string());
    write_report_csv(out, tree, finest);
    if (!out) throw Error(ErrorCode::Io, "short write to " + path.string());
}

std::string report_json(const ReportTree& tree, Scope finest) {
    nlohmann::json j;
    j["videos"] = nlohmann::json::array();
    j["categories"] = nlohmann::json::array();
    if (included(Scope::Video, finest))
        for (const auto& v : tree.videos) j["videos"].push_back(to_json(v));
    if (included(Scope::Category, finest))
        for (const auto& c : tree.categories) j["categories"].push_back(to_json(c));
    j["overall"] = to_json(tree.overall);
    return j.dump(2);
}

std::vector<MetricsReport> read_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader) throw Error(ErrorCode::Io, "report CSV header not recognized");
    std::vector<MetricsReport> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != 15) throw Error(ErrorCode::Io, fmt::format("report line {}: {} cells", lineno, cells.size()));
        MetricsReport r;
        try {
            r.scope = parse_scope(cells[0]);
            r.category = cells[1];
            r.video = cells[2];
            r.counts = {std::stoull(cells[3]), std::stoull(cells[4]), std::stoull(cells[5]), std::stoull(cells[6])};
            for (std::size_t i = 0; i < kAllMetrics.size(); ++i) r.set(kAllMetrics[i], std::stod(cells[7 + i]));
            r.degenerate = static_cast<unsigned>(std::stoul(cells[14]));
        } catch (const Error&) {
            throw Error(ErrorCode::Io, fmt::format("report line {}: bad scope", lineno));
        } catch (const std::exception&) {
            throw Error(ErrorCode::Io, fmt::format("report line {}: bad number", lineno));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<MetricsReport> read_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
    return read_report_csv(in);
}

MethodResults method_results(std::string method, const std::vector<MetricsReport>& rows) {
    MethodResults m;
    m.method = std::move(method);
    bool have_overall = false;
    for (const auto& r : rows) {
        if (r.scope == Scope::Category) m.categories.push_back(r);
        if (r.scope == Scope::Overall) {
            m.overall = r;
            have_overall = true;
        }
    }
    if (!have_overall) throw Error(ErrorCode::Io, "report for " + m.method + " has no overall row");
    return m;
}

void write_ranking_csv(std::ostream& out, const RankingTable& table) {
    out << "method,R,R_cat";
    for (Metric m : kAllMetrics) out << ",rank_" << to_string(m);
    out << '\n';
    for (const auto& m : table.methods) {
        out << fmt::format("{},{:.10f},{:.10f}", m.method, m.r, m.r_cat);
        for (double r : m.overall_ranks) out << fmt::format(",{:.10f}", r);
        out << '\n';
    }
}

} // namespace bgaug
