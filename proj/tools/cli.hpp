#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "omgci/entropy.hpp"
#include "omgci/verify.hpp"

namespace omgci::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    LogBase log_base = LogBase::Natural;
    std::uint64_t seed = kDefaultSeed;
    std::map<std::string, double> tolerances;
    OutputFormat format = OutputFormat::Csv;
};

/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest text with 17 significant digits; "inf", "-inf", "nan" otherwise.
std::string format_number(double v);

}  // namespace omgci::cli
