#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Writes normal output to out and
/// diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bgaug::cli
