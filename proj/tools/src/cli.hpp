#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace maxgal::cli {

enum ExitCode : int {
    kOk = 0,
    kHypothesesFail = 1,
    kUsage = 2,
    kConditional = 3,
    kExceptionalGenus = 4,
};

inline constexpr std::uint64_t kDefaultScanBound = 1000000;
inline constexpr std::uint64_t kDefaultRhoBudget = 200000;

/// MAXGAL_SCAN_BOUND if set to a positive integer, else kDefaultScanBound.
std::uint64_t default_scan_bound();

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maxgal::cli
