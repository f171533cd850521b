#pragma once

#include "bgaug/metrics.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace bgaug {

/// Rows finer than `finest` are omitted: Video writes everything, Overall only the last row.
void write_report_csv(std::ostream& out, const ReportTree& tree, Scope finest = Scope::Video);
void write_report_csv(const std::filesystem::path& path, const ReportTree& tree, Scope finest = Scope::Video);
std::string report_json(const ReportTree& tree, Scope finest = Scope::Video);

/// Throws Io on malformed rows, MissingFile when absent.
std::vector<MetricsReport> read_report_csv(std::istream& in);
std::vector<MetricsReport> read_report_csv(const std::filesystem::path& path);

/// Category and overall rows of one report; the method is named after the file stem.
/// Throws Io when the overall row is missing.
MethodResults method_results(std::string method, const std::vector<MetricsReport>& rows);

void write_ranking_csv(std::ostream& out, const RankingTable& table);

/// Throws InvalidArgument.
Scope parse_scope(std::string_view s);

} // namespace bgaug
